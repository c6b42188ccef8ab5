"""settop: finite-model workbench for set-open topologies on
homeomorphism groups of finite topological spaces."""

from .bitsets import full_mask, mask_of, points, render
from .campaigns import (
    THEOREMS,
    CampaignOptions,
    CampaignReport,
    Violation,
    enumerate_invariant_families,
    lattice_report,
    replay_violation,
    run_campaign,
)
from .checks import (
    ConditionReport,
    MapTable,
    check_connected_cover,
    check_family_conditions,
    is_acceptable,
    is_admissible,
    is_continuous,
    is_paratopological_group,
    is_slh,
    is_topological_group,
    quotient_check,
)
from .generate import (
    CanonicalForm,
    are_homeomorphic,
    canonical_form,
    close_under_finite_unions,
    enumerate_topologies,
    topology_from_subbase,
)
from .homeo import (
    HomeoGroup,
    enumerate_homeomorphisms,
    is_homogeneous,
    orbits_of_opens,
    stabilizer,
)
from .setopen import (
    GroupTopology,
    SubsetFamily,
    all_nonempty_opens,
    bracket,
    compare_topologies,
    refines,
    set_open_topology,
)
from .spaces import Space, SpaceClassification, SpaceError, product
from .textio import emit_space, fixture_path, load_fixture, parse_space

__version__ = "0.1.0"

"""Information dominating sets under the binary local majority rule.

A subset D of a graph's vertices is an information dominating set (IDS)
when no two distinct valid opinion profiles agree on all of D, where a
profile is valid if every vertex has at least as many same-minded as
opposite-minded neighbors. Observing D's opinions then determines
everyone's. This package enumerates valid profiles, checks candidate
subsets, finds minimum IDSs (exactly in general, in linear time on
forests), and builds the reduction gadgets that make the minimization
problem hard.
"""

from .errors import (
    ContractError,
    FormatError,
    IdsLibError,
    InternalConsistencyError,
    LimitError,
)
from .graph import (
    Graph,
    VertexSet,
    graph_from_json,
    graph_to_json,
    parse_graph,
    to_dot,
    to_edge_list,
)
from .profiles import (
    DEFAULT_VERTEX_LIMIT,
    Profile,
    ValidProfileSet,
    complement_profile,
    enumerate_valid_profiles,
    is_valid_profile,
)
from .reductions import (
    DEFAULT_BISECTION_CAP,
    Bisection,
    GadgetMeta,
    IntegerSet,
    build_idsc_gadget,
    build_mids_gadget,
    build_scb_gadget,
    check_scb,
    solve_spp,
)
from .solver import (
    CheckResult,
    MidsResult,
    UpperBoundResult,
    check_ids,
    solve_mids_exact,
    vc_sufficient_check,
    vc_upper_bound,
)
from .transform import (
    TransformMap,
    collapse_ids,
    lift_profile,
    odd_transform,
    project_profile,
)
from .trees import (
    TreePlan,
    check_ids_tree,
    nonleaf_mvc_tree,
    plan_forest,
    solve_mids_tree,
)

__version__ = "0.1.0"

__all__ = [
    "Bisection",
    "CheckResult",
    "ContractError",
    "DEFAULT_BISECTION_CAP",
    "DEFAULT_VERTEX_LIMIT",
    "FormatError",
    "GadgetMeta",
    "Graph",
    "IdsLibError",
    "IntegerSet",
    "InternalConsistencyError",
    "LimitError",
    "MidsResult",
    "Profile",
    "TransformMap",
    "TreePlan",
    "UpperBoundResult",
    "ValidProfileSet",
    "VertexSet",
    "build_idsc_gadget",
    "build_mids_gadget",
    "build_scb_gadget",
    "check_ids",
    "check_ids_tree",
    "check_scb",
    "collapse_ids",
    "complement_profile",
    "enumerate_valid_profiles",
    "graph_from_json",
    "graph_to_json",
    "is_valid_profile",
    "lift_profile",
    "nonleaf_mvc_tree",
    "odd_transform",
    "parse_graph",
    "plan_forest",
    "project_profile",
    "solve_mids_exact",
    "solve_mids_tree",
    "solve_spp",
    "to_dot",
    "to_edge_list",
    "vc_sufficient_check",
    "vc_upper_bound",
]

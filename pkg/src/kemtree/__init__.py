"""Exact Kemeny's constant and Wiener index computations on trees and graphs."""

from .errors import (
    DisconnectedError,
    KemtreeError,
    NotABridgeConfigError,
    NotATreeError,
    ParseError,
    PathTooShortError,
    ResourceLimitError,
    RouteRequiresTreeError,
    TheoremViolationError,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    Tree,
    all_pairs_distances,
    leaf_center_distances,
    parse_edge_list,
    tree_from_edges,
    tree_from_graph,
)
from .linalg import det_exact, laplacian, spanning_tree_count, two_forest_count
from .invariants import (
    InvariantReport,
    KemenyRoute,
    WeightedEdgeMap,
    compute_invariants,
    format_exact,
    format_rational,
    gutman_index,
    kemeny_edge_cut_route,
    kemeny_forest_route,
    kemeny_wiener_route,
    omega_weights,
    wiener_distance_route,
    wiener_edge_cut_route,
)
from .enumeration import (
    CanonicalCode,
    TreeFamily,
    canonical_code,
    census_line,
    enumerate_trees,
    family,
    parse_census_line,
    prufer_oracle_count,
)
from .transforms import (
    CoverWitness,
    MatePair,
    PathDecomposition,
    apply_op1,
    apply_op2,
    covers,
    decompose_path,
    generate_mates_op1,
    maximal_elements,
    op1_delta_formula,
    op2_delta_formula,
    theorem_leaf_filter,
)

__all__ = [
    "CanonicalCode",
    "CoverWitness",
    "DisconnectedError",
    "DistanceMatrix",
    "Graph",
    "InvariantReport",
    "KemenyRoute",
    "KemtreeError",
    "MatePair",
    "NotABridgeConfigError",
    "NotATreeError",
    "ParseError",
    "PathDecomposition",
    "PathTooShortError",
    "ResourceLimitError",
    "RouteRequiresTreeError",
    "TheoremViolationError",
    "Tree",
    "TreeFamily",
    "WeightedEdgeMap",
    "all_pairs_distances",
    "apply_op1",
    "apply_op2",
    "canonical_code",
    "census_line",
    "compute_invariants",
    "covers",
    "decompose_path",
    "det_exact",
    "enumerate_trees",
    "family",
    "format_exact",
    "format_rational",
    "generate_mates_op1",
    "gutman_index",
    "kemeny_edge_cut_route",
    "kemeny_forest_route",
    "kemeny_wiener_route",
    "laplacian",
    "leaf_center_distances",
    "maximal_elements",
    "omega_weights",
    "op1_delta_formula",
    "op2_delta_formula",
    "parse_census_line",
    "parse_edge_list",
    "prufer_oracle_count",
    "spanning_tree_count",
    "theorem_leaf_filter",
    "tree_from_edges",
    "tree_from_graph",
    "two_forest_count",
    "wiener_distance_route",
    "wiener_edge_cut_route",
]

__version__ = "0.1.0"

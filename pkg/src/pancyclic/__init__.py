"""Exact decision procedures and extremal searches for pancyclicity.

A small dependency-free toolkit for graphs of order up to 64:

* bit-adjacency graphs with graph6/DOT serialization (:mod:`.graphs`),
* canonical labeling and isomorphism decisions (:mod:`.canon`),
* the named graph families used by the extremal constructions
  (:mod:`.families`),
* exact predicate checks: triangle cover, pancyclic, vertex-/edge-pancyclic,
  per-edge cycle spectra, distance-layer inequalities (:mod:`.checks`),
* isomorph-free exhaustive generation and the minimum-size / maximum-diameter
  searches built on it (:mod:`.search`).
"""

from .graphs import (
    MAX_ORDER,
    DistanceLayers,
    Edge,
    Graph,
    Graph6Error,
    GraphError,
    build_graph,
    diameter,
    distance_layers,
    eccentricity,
    emit_dot,
    emit_graph6,
    is_connected,
    is_k_connected,
    min_degree,
    parse_graph6,
    vertex_connectivity,
)
from .canon import (
    CanonicalCode,
    are_isomorphic,
    canonical_code,
    canonical_graph,
    canonical_labeling,
)
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    Labeled,
    a_graph,
    complete,
    cycle,
    empty,
    fan,
    g_ring,
    h_block,
    h_block_spine_edges,
    join,
    odd_extremal,
    part_from_token,
    path,
    q_graph,
    sequential_join,
    wheel,
)
from .checks import (
    CheckReport,
    CycleSpectrum,
    cycle_spectrum,
    edge_cycle_lengths,
    has_triangle_cover,
    is_edge_pancyclic,
    is_pancyclic,
    is_vertex_pancyclic,
    path_length_set,
    verify_distance_layer_bounds,
    verify_h_block_properties,
)
from .search import (
    BUDGET_NOTE,
    WORKERS_ENV,
    GraphFilter,
    SearchBudgetExceeded,
    SearchOutcome,
    enumerate_covered_graphs,
    enumerate_graphs,
    extremal_census,
    max_diameter_edge_pancyclic,
    min_size_edge_pancyclic,
    min_size_triangle_cover,
    resolve_workers,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "BUDGET_NOTE",
    "WORKERS_ENV",
    "FAMILY_NAMES",
    "Graph",
    "Edge",
    "GraphError",
    "Graph6Error",
    "DistanceLayers",
    "CanonicalCode",
    "CheckReport",
    "CycleSpectrum",
    "FamilySpec",
    "Labeled",
    "GraphFilter",
    "SearchOutcome",
    "SearchBudgetExceeded",
    "build_graph",
    "parse_graph6",
    "emit_graph6",
    "emit_dot",
    "distance_layers",
    "eccentricity",
    "diameter",
    "is_connected",
    "is_k_connected",
    "min_degree",
    "vertex_connectivity",
    "canonical_code",
    "canonical_labeling",
    "canonical_graph",
    "are_isomorphic",
    "cycle",
    "path",
    "complete",
    "empty",
    "join",
    "sequential_join",
    "wheel",
    "fan",
    "a_graph",
    "odd_extremal",
    "h_block",
    "h_block_spine_edges",
    "g_ring",
    "q_graph",
    "part_from_token",
    "path_length_set",
    "edge_cycle_lengths",
    "cycle_spectrum",
    "has_triangle_cover",
    "is_edge_pancyclic",
    "is_vertex_pancyclic",
    "is_pancyclic",
    "verify_distance_layer_bounds",
    "verify_h_block_properties",
    "enumerate_graphs",
    "enumerate_covered_graphs",
    "min_size_edge_pancyclic",
    "min_size_triangle_cover",
    "max_diameter_edge_pancyclic",
    "extremal_census",
    "resolve_workers",
    "__version__",
]

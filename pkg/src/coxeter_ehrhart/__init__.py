"""Exact Ehrhart theory for Coxeter permutahedra and shifted integer zonotopes.

The permutahedron of a classical root system (families A, B, C, D) is the
Minkowski sum of the line segments spanned by its positive roots, centered
so that the segment midpoints add up to a possibly half-integral point.
This package computes the lattice-point counting quasipolynomial of that
polytope — and of any integer zonotope translated by a rational vector —
exactly, in three mutually independent ways:

* a census of the pseudoforests hiding inside the root configuration
  (:mod:`~coxeter_ehrhart.ehrhart`),
* coefficient extraction from exponential generating functions built out
  of the Lambert W series (:mod:`~coxeter_ehrhart.egf`),
* brute-force enumeration of lattice points in a bounding box
  (:mod:`~coxeter_ehrhart.oracle`).

All arithmetic is exact (integers and :class:`fractions.Fraction`).
"""

from .egf import (
    SEQUENCE_KINDS,
    component_egfs,
    egf_ehrhart_standard_odd,
    egf_ehrhart_values,
    structure_counts,
)
from .ehrhart import (
    CENSUS_LIMITS,
    EnumerationLimitError,
    ForestCensus,
    QuasiPolynomial,
    ZonotopeFormatError,
    ZonotopeSpec,
    coxeter_zonotope,
    ehrhart_almost_integral,
    ehrhart_integral_coxeter,
    ehrhart_standard_coxeter,
    forest_census,
    independent_subsets,
    load_zonotope_file,
    parse_zonotope_document,
)
from .linalg import (
    IntegerEchelon,
    chi,
    determinant,
    dot,
    int_vector,
    integer_kernel_basis,
    rank,
    rat_vector,
    relative_volume,
)
from .oracle import (
    BoxLimitError,
    DEFAULT_MAX_BOX,
    MembershipCertificate,
    brute_force_structures,
    count_points,
    zonotope_contains,
)
from .roots import (
    FAMILIES,
    PositiveRootSet,
    is_integral,
    positive_roots,
    rank_label,
    standard_shift,
    table_label,
)
from .series import RatSeries, lambert_w
from .signed_graphs import (
    ComponentStats,
    SignedGraph,
    all_tree_components_even,
    classify,
    graph_from_roots,
    halfedge,
    negative_edge,
    negative_loop,
    positive_edge,
    roots_from_graph,
    vertex_switch,
)

__version__ = "0.1.0"

__all__ = [
    "CENSUS_LIMITS",
    "ComponentStats",
    "DEFAULT_MAX_BOX",
    "BoxLimitError",
    "EnumerationLimitError",
    "FAMILIES",
    "ForestCensus",
    "IntegerEchelon",
    "MembershipCertificate",
    "PositiveRootSet",
    "QuasiPolynomial",
    "RatSeries",
    "SEQUENCE_KINDS",
    "SignedGraph",
    "ZonotopeFormatError",
    "ZonotopeSpec",
    "all_tree_components_even",
    "brute_force_structures",
    "chi",
    "classify",
    "component_egfs",
    "count_points",
    "coxeter_zonotope",
    "determinant",
    "dot",
    "egf_ehrhart_standard_odd",
    "egf_ehrhart_values",
    "ehrhart_almost_integral",
    "ehrhart_integral_coxeter",
    "ehrhart_standard_coxeter",
    "forest_census",
    "graph_from_roots",
    "halfedge",
    "independent_subsets",
    "int_vector",
    "integer_kernel_basis",
    "is_integral",
    "lambert_w",
    "load_zonotope_file",
    "negative_edge",
    "negative_loop",
    "parse_zonotope_document",
    "positive_edge",
    "positive_roots",
    "rank",
    "rank_label",
    "rat_vector",
    "relative_volume",
    "roots_from_graph",
    "standard_shift",
    "structure_counts",
    "table_label",
    "vertex_switch",
    "zonotope_contains",
]

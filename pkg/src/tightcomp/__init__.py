"""Tight components, codegree thresholds, and extremal 3-graph constructions.

The library answers questions of the form: how large a tight component
is forced in a 3-uniform hypergraph whose minimum codegree is a given
fraction of n? It provides the extremal generators (balanced three-part
families, split-W families, projective-plane colorings), exact rational
upper/lower bound curves, exact fractional matchings, and brute-force
oracles that verify the structural claims at desk scale.
"""

from .bounds import (
    PiecewiseBound,
    Rational,
    best_tc_lower,
    emit_curve_csv,
    emit_curve_svg,
    f2,
    f3_lower,
    f3_lower_curve,
    f3_upper,
    f3_upper_curve,
    q_value,
    r_sequence,
    step_value,
    tc_lower_bound,
)
from .constructions import (
    ColoredCompleteGraph,
    f2_extremal,
    max_within_class_discrepancy,
    near_one_factorization,
    projective_construction,
    split_w,
    three_part,
    verify_construction,
)
from .geometry import (
    FiniteField,
    ProjectivePlane,
    gf,
    is_admissible_order,
    is_prime_power,
    projective_plane,
    verify_plane_axioms,
)
from .hypergraph import (
    FormatError,
    Hypergraph,
    TightComponent,
    TightDecomposition,
    complete_hypergraph,
    parse,
    serialize,
)
from .matchings import (
    FractionalMatching,
    check_intersecting_corollary,
    fractional_matching_number,
    is_intersecting,
    matching_number,
    max_degree,
    random_maximal_intersecting_family,
)
from .search import (
    SearchOutcome,
    SearchTask,
    hypergraph_from_mask,
    max_codegree_with_tc_below,
    merge_search_outcomes,
    search_max_codegree_with_tc_below,
    verify_connectivity_prop,
    verify_mycroft,
)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "TightComponent",
    "TightDecomposition",
    "FormatError",
    "parse",
    "serialize",
    "complete_hypergraph",
    "FiniteField",
    "ProjectivePlane",
    "gf",
    "is_prime_power",
    "is_admissible_order",
    "projective_plane",
    "verify_plane_axioms",
    "ColoredCompleteGraph",
    "three_part",
    "split_w",
    "f2_extremal",
    "near_one_factorization",
    "projective_construction",
    "verify_construction",
    "max_within_class_discrepancy",
    "Rational",
    "PiecewiseBound",
    "r_sequence",
    "q_value",
    "step_value",
    "f2",
    "f3_upper",
    "f3_lower",
    "f3_upper_curve",
    "f3_lower_curve",
    "tc_lower_bound",
    "best_tc_lower",
    "emit_curve_csv",
    "emit_curve_svg",
    "FractionalMatching",
    "matching_number",
    "fractional_matching_number",
    "is_intersecting",
    "max_degree",
    "check_intersecting_corollary",
    "random_maximal_intersecting_family",
    "SearchTask",
    "SearchOutcome",
    "hypergraph_from_mask",
    "max_codegree_with_tc_below",
    "search_max_codegree_with_tc_below",
    "merge_search_outcomes",
    "verify_mycroft",
    "verify_connectivity_prop",
]

"""Triangle partition maps with exact arithmetic."""

from .classical import (
    ClassicalMapId,
    builtin_combo,
    classical_step,
    guting_digits,
    guting_matrix,
    guting_matrix_identity,
    verify_equivalence,
)
from .combo import LOOP, TERMINAL, ComboNode, ComboSchedule, combo_apply, combo_step, forced_node, trip_node
from .engine import (
    Membership,
    PermTriple,
    Termination,
    TreeSequence,
    TripMap,
    TripSequence,
    a0_matrix,
    a1_matrix,
    apply_bit_map,
    apply_triangle_function,
    b_matrix,
    build_trip_map,
    convert_sequences,
    enumerate_family,
    map_form,
    membership,
    projected_vertices,
    subdivide,
    subtriangle,
    tree_sequence,
    tree_to_trip,
    triangle_function_matrix,
    trip_sequence,
    trip_to_tree,
    word_matrix,
    word_triangle,
)
from .errors import (
    DegenerateTriangle,
    DepthLimitExceeded,
    DimensionMismatch,
    DimensionTooSmall,
    DomainError,
    MalformedPrefix,
    MixedFields,
    NoRuleMatched,
    NonUnimodular,
    NotReduced,
    ParseError,
    PeriodNotDetected,
    PointOutsideDomain,
    PointOutsideRegion,
    RepeatedEigenvalueUnresolved,
    TripError,
    ZeroLeadingCoordinate,
    ZeroPolynomial,
)
from .exact import (
    AlgebraicReal,
    FieldElement,
    IntMatrix,
    NumberField,
    Permutation,
    Polynomial,
    char_poly,
    parse_point,
    parse_polynomial,
)
from .periodicity import (
    Classification,
    EigenWitness,
    PeriodicWord,
    RatioReport,
    Verdict,
    catalog_lookup,
    classify_word,
    detect_orbit_periodicity,
    eigen_in_triangle,
    minimal_polynomial_of_point,
    periodic_matrix,
    ratio_bound_check,
    reduce_triple,
    triangle_diameter_sq,
)
from .render import SubdivisionFigure, subdivision_figure, to_svg
from .simplex import (
    build_nd,
    duplicate_classes,
    same_algorithm,
    simplex_apply,
    simplex_sequence,
    stabilizer_construction,
    unique_count_bound,
)

__all__ = [
    "AlgebraicReal",
    "ClassicalMapId",
    "Classification",
    "ComboNode",
    "ComboSchedule",
    "DegenerateTriangle",
    "DepthLimitExceeded",
    "DimensionMismatch",
    "DimensionTooSmall",
    "DomainError",
    "EigenWitness",
    "FieldElement",
    "IntMatrix",
    "LOOP",
    "MalformedPrefix",
    "Membership",
    "MixedFields",
    "NoRuleMatched",
    "NonUnimodular",
    "NotReduced",
    "NumberField",
    "ParseError",
    "PeriodNotDetected",
    "PeriodicWord",
    "PermTriple",
    "Permutation",
    "PointOutsideDomain",
    "PointOutsideRegion",
    "Polynomial",
    "RatioReport",
    "RepeatedEigenvalueUnresolved",
    "SubdivisionFigure",
    "TERMINAL",
    "Termination",
    "TreeSequence",
    "TripError",
    "TripMap",
    "TripSequence",
    "Verdict",
    "ZeroLeadingCoordinate",
    "ZeroPolynomial",
    "a0_matrix",
    "a1_matrix",
    "apply_bit_map",
    "apply_triangle_function",
    "b_matrix",
    "build_nd",
    "build_trip_map",
    "builtin_combo",
    "catalog_lookup",
    "char_poly",
    "classical_step",
    "classify_word",
    "combo_apply",
    "combo_step",
    "convert_sequences",
    "detect_orbit_periodicity",
    "duplicate_classes",
    "eigen_in_triangle",
    "enumerate_family",
    "forced_node",
    "guting_digits",
    "guting_matrix",
    "guting_matrix_identity",
    "map_form",
    "membership",
    "minimal_polynomial_of_point",
    "parse_point",
    "parse_polynomial",
    "periodic_matrix",
    "projected_vertices",
    "ratio_bound_check",
    "reduce_triple",
    "same_algorithm",
    "simplex_apply",
    "simplex_sequence",
    "stabilizer_construction",
    "subdivide",
    "subdivision_figure",
    "subtriangle",
    "to_svg",
    "tree_sequence",
    "tree_to_trip",
    "triangle_diameter_sq",
    "triangle_function_matrix",
    "trip_node",
    "trip_sequence",
    "trip_to_tree",
    "unique_count_bound",
    "verify_equivalence",
    "word_matrix",
    "word_triangle",
]

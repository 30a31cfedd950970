"""Partial duals, genera, and the partial-dual genus polynomial.

Oriented ribbon graphs are handled as combinatorial maps (pairs of
permutations on half-edges) or as chord diagrams (double-occurrence
cyclic words).  The package computes partial duals and genera, the genus
generating polynomial over all partial duals, and verifies by exhaustive
enumeration and exact linear algebra that this polynomial satisfies the
four-term relation, i.e. is a weight system.
"""

from .diagrams import (
    ChordDiagram,
    CutOutOfRangeError,
    EmptyCaravanError,
    InterlaceSequence,
    LabelCountError,
    MultiCircleDiagram,
    OddLengthError,
    UnknownChordError,
    caravan,
    enumerate_diagrams,
    from_map,
    partial_dual_diagram,
    product,
)
from .maps import (
    CombinatorialMap,
    EdgeOutOfRangeError,
    FixedPointError,
    NotAdjacentError,
    NotInvolutionError,
    SizeMismatchError,
    are_isomorphic,
    parse_map,
)
from .polynomials import IntPolynomial, RationalMatrix, solve_in_span
from .weight_system import (
    FourTermQuadruple,
    GenusPolynomialResult,
    NoSolutionError,
    NotABasisError,
    check_4T,
    check_intersection_graph_invariance,
    check_multiplicativity,
    dim_quotient,
    express_modulo_4T,
    generate_4T_quadruples,
    pd_genus_polynomial,
    pd_genus_report,
)

__version__ = "0.1.0"

__all__ = [
    "ChordDiagram",
    "CombinatorialMap",
    "CutOutOfRangeError",
    "EdgeOutOfRangeError",
    "EmptyCaravanError",
    "FixedPointError",
    "FourTermQuadruple",
    "GenusPolynomialResult",
    "IntPolynomial",
    "InterlaceSequence",
    "LabelCountError",
    "MultiCircleDiagram",
    "NoSolutionError",
    "NotABasisError",
    "NotAdjacentError",
    "NotInvolutionError",
    "OddLengthError",
    "RationalMatrix",
    "SizeMismatchError",
    "UnknownChordError",
    "are_isomorphic",
    "caravan",
    "check_4T",
    "check_intersection_graph_invariance",
    "check_multiplicativity",
    "dim_quotient",
    "enumerate_diagrams",
    "express_modulo_4T",
    "from_map",
    "generate_4T_quadruples",
    "parse_map",
    "partial_dual_diagram",
    "pd_genus_polynomial",
    "pd_genus_report",
    "product",
    "solve_in_span",
]

"""Exact Thurston-Bennequin invariants of Brieskorn double point links.

The pipeline resolves the plane branch x^m + y^n = 0, lifts the resolution
through the double cover z^2 = x^m + y^n, marks the real structure for
either sign of z^2, and evaluates the tb formula on the resulting graph.
Everything is exact rational arithmetic; there are no floats anywhere.
"""

from .errors import (
    BadExponents,
    BadOddNeighborCount,
    InconsistentAnnotation,
    InternalInvariantError,
    InvalidDocument,
    IsolatedMinusOne,
    MalformedDecomposition,
    NonIntegralMultiplicity,
    NonPositiveM,
    NotNumericallyGorenstein,
    OddSelfIntOnBranch,
    SingularMatrix,
    StructureMismatch,
    TbcalcError,
    UserInputError,
    WuMismatch,
    ZeroDenominator,
)
from .numeric import (
    Gf2Result,
    Rational,
    cf_eval,
    det_exact,
    format_rational,
    parse_rational,
    solve_gf2,
    solve_rational,
)
from .graph import (
    Arm,
    DecoratedGraph,
    VertexData,
    arm_is_imaginary,
    arm_weight,
    arms,
    blow_down_minimize,
    canonical_form,
    intersection_matrix,
    is_negative_definite,
    is_rupture,
    n_prime,
    solve_intersection_system,
)
from .embedres import (
    BlowupStep,
    BlowupTrace,
    EuclidData,
    build_gamma_f,
    c1_coefficients,
    euclid_data,
    multiplicities,
    separate_odd_odd,
)
from .cover import (
    SIGN_MINUS,
    SIGN_PLUS,
    CoverData,
    CoverGraph,
    build_cover,
    has_conj_adjacent_pair,
    label_arms,
    lift_double_cover,
    mark_real_structure,
    minimize_and_label,
)
from .charclass import (
    WU_CONFIRMED_CONSISTENT,
    WU_CONFIRMED_UNIQUE,
    WU_SKIPPED_SINGULAR,
    CharacteristicData,
    canonical_coefficients,
    parity_checks,
    restrict_to_real,
)
from .tb import TbResult, tb, tb_from_graph
from .linkform import (
    KIND_ONE_SIDED,
    KIND_TWO_SIDED_NONORIENTABLE,
    KIND_TWO_SIDED_ORIENTABLE,
    ContractedPoint,
    Decomposition,
    LinkingMatrix,
    Piece,
    contraction_linking_matrix,
    linking_form_from_decomposition,
)
from .verify import SUITE_NAMES, SuiteResult, VerifyReport, verify_identities
from .serialize import FORMAT_VERSION, graph_from_document, graph_to_document, to_dot

__version__ = "0.1.0"

__all__ = [
    "Arm",
    "BadExponents",
    "BadOddNeighborCount",
    "BlowupStep",
    "BlowupTrace",
    "CharacteristicData",
    "ContractedPoint",
    "CoverData",
    "CoverGraph",
    "Decomposition",
    "DecoratedGraph",
    "EuclidData",
    "FORMAT_VERSION",
    "Gf2Result",
    "InconsistentAnnotation",
    "InternalInvariantError",
    "InvalidDocument",
    "IsolatedMinusOne",
    "KIND_ONE_SIDED",
    "KIND_TWO_SIDED_NONORIENTABLE",
    "KIND_TWO_SIDED_ORIENTABLE",
    "LinkingMatrix",
    "MalformedDecomposition",
    "NonIntegralMultiplicity",
    "NonPositiveM",
    "NotNumericallyGorenstein",
    "OddSelfIntOnBranch",
    "Piece",
    "Rational",
    "SIGN_MINUS",
    "SIGN_PLUS",
    "SUITE_NAMES",
    "SingularMatrix",
    "StructureMismatch",
    "SuiteResult",
    "TbResult",
    "TbcalcError",
    "UserInputError",
    "VerifyReport",
    "VertexData",
    "WU_CONFIRMED_CONSISTENT",
    "WU_CONFIRMED_UNIQUE",
    "WU_SKIPPED_SINGULAR",
    "WuMismatch",
    "ZeroDenominator",
    "arm_is_imaginary",
    "arm_weight",
    "arms",
    "blow_down_minimize",
    "build_cover",
    "build_gamma_f",
    "c1_coefficients",
    "canonical_coefficients",
    "canonical_form",
    "cf_eval",
    "contraction_linking_matrix",
    "det_exact",
    "euclid_data",
    "format_rational",
    "graph_from_document",
    "graph_to_document",
    "has_conj_adjacent_pair",
    "intersection_matrix",
    "is_negative_definite",
    "is_rupture",
    "label_arms",
    "lift_double_cover",
    "linking_form_from_decomposition",
    "mark_real_structure",
    "minimize_and_label",
    "multiplicities",
    "n_prime",
    "parity_checks",
    "parse_rational",
    "restrict_to_real",
    "separate_odd_odd",
    "solve_gf2",
    "solve_intersection_system",
    "solve_rational",
    "tb",
    "tb_from_graph",
    "to_dot",
    "verify_identities",
]

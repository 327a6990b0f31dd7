"""
Lie superalgebras over the rationals.

This package provides the structure-constant model and its calculus:
- base: scalars, parity, limits and the exception hierarchy
- algebra: LieSuperalgebra, axiom validation, bracket evaluation
- subspace: graded subspaces, series, center, quotients, sums
- linalg: exact row reduction over QQ
"""

from .algebra import (
    LieSuperalgebra,
    ValidationReport,
    Violation,
    bracket,
    validate,
)
from .base import (
    MAX_TOTAL_DIM,
    ONE,
    ZERO,
    ChainComplexError,
    DimensionMismatch,
    EngineDisagreement,
    NotAnIdealError,
    NotCentralError,
    NotGradedError,
    Parity,
    PreconditionError,
    Scalar,
    SchemaError,
    SuperalgebraError,
    Vector,
    format_scalar,
    parse_rational,
    super_sign,
    to_scalar,
)
from .subspace import (
    GradedSubspace,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    graded_span,
    ideal_from_vectors,
    is_abelian,
    is_maximal_class,
    is_nilpotent,
    is_trivial_ls,
    lower_central_series,
    nilpotency_class,
    projection,
    quotient,
    random_basis_change,
)

__all__ = [
    # Constants
    "MAX_TOTAL_DIM",
    "ONE",
    "ZERO",
    # Types
    "Parity",
    "Scalar",
    "Vector",
    "LieSuperalgebra",
    "GradedSubspace",
    "ValidationReport",
    "Violation",
    # Exceptions
    "SuperalgebraError",
    "SchemaError",
    "DimensionMismatch",
    "NotGradedError",
    "NotAnIdealError",
    "NotCentralError",
    "PreconditionError",
    "ChainComplexError",
    "EngineDisagreement",
    # Scalars
    "format_scalar",
    "parse_rational",
    "super_sign",
    "to_scalar",
    # Axioms and brackets
    "validate",
    "bracket",
    # Derived data
    "derived_subalgebra",
    "lower_central_series",
    "center",
    "is_abelian",
    "is_nilpotent",
    "nilpotency_class",
    "is_maximal_class",
    "is_trivial_ls",
    # Constructions
    "graded_span",
    "ideal_from_vectors",
    "quotient",
    "projection",
    "direct_sum",
    "change_basis",
    "random_basis_change",
]

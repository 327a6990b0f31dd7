"""
Core superalgebra infrastructure: scalars, parity, limits and exceptions.

This module provides the foundation every computation runs on:
- Exact rational scalars (elements of sympy's QQ domain)
- Z2 parity arithmetic and the super sign (-1)^{|x||y|}
- Hard limits on algebra size accepted by the engines
- The exception hierarchy shared by all modules
"""

import re
from enum import IntEnum
from typing import Any

from sympy import QQ

# Element type of the rational field (PythonMPQ or gmpy2.mpq, always in lowest terms)
Scalar = QQ.dtype

# Coordinate vector of length m+n over the basis (even block first)
Vector = tuple[Any, ...]

ZERO = QQ(0)
ONE = QQ(1)


# === LIMITS ===
MAX_TOTAL_DIM = 12  # Chain spaces grow cubically in m+n

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_FLOAT_RE = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+(\.\d*)?[eE][+-]?\d+|(\d+\.\d*|\.\d+)[eE][+-]?\d+)\s*$")


class Parity(IntEnum):
    """Z2 grading of a homogeneous element."""

    EVEN = 0
    ODD = 1

    def __add__(self, other: int) -> "Parity":
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    @property
    def label(self) -> str:
        return "even" if self is Parity.EVEN else "odd"


def super_sign(p: int, q: int) -> int:
    """Return (-1)^{pq}."""
    return -1 if (p and q) else 1


# === EXCEPTIONS ===


class SuperalgebraError(Exception):
    """Base class for all superschur errors."""

    pass


class SchemaError(SuperalgebraError):
    """Raised when structural invariants of an algebra or subspace are violated."""

    pass


class DimensionMismatch(SuperalgebraError):
    """Raised when a vector or matrix has the wrong length for the algebra."""

    pass


class NotGradedError(SuperalgebraError):
    """Raised when a subspace is not closed under projection to parity blocks."""

    def __init__(self, message: str = "not graded"):
        super().__init__(message)


class NotAnIdealError(SuperalgebraError):
    """Raised when [I, L] is not contained in I."""

    def __init__(self, message: str = "not an ideal"):
        super().__init__(message)


class NotCentralError(SuperalgebraError):
    """Raised when a subspace or element is required to be central and is not."""

    def __init__(self, message: str = "N not central"):
        super().__init__(message)


class PreconditionError(SuperalgebraError):
    """Raised when an operation's named precondition does not hold."""

    pass


class ChainComplexError(SuperalgebraError):
    """Raised when d2*d3 != 0 (a sign-convention bug, never bad user input)."""

    pass


class EngineDisagreement(SuperalgebraError):
    """Raised when the chain engine and the cochain oracle disagree."""

    pass


# === SCALARS ===


def to_scalar(value: Any) -> Scalar:
    """
    Convert an int, a QQ element or an exact rational string to a Scalar.

    Floats are refused: no rounding is allowed anywhere in the system.

    Raises:
        ValueError: For floats, malformed strings or a zero denominator
    """
    if isinstance(value, float):
        raise ValueError(f"floating point not accepted: {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    return QQ.convert(value)


def parse_rational(text: str) -> Scalar:
    """
    Parse an exact rational "p" or "p/q" with q > 0.

    Raises:
        ValueError: If the text is not an exact rational
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        if _FLOAT_RE.match(text):
            raise ValueError(f"floating point not accepted: {text!r}")
        raise ValueError(f"not an exact rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return QQ(numerator, denominator)


def format_scalar(value: Scalar) -> str:
    """Render a scalar as "p" or "p/q"."""
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def zero_vector(length: int) -> Vector:
    return (ZERO,) * length


def unit_vector(length: int, index: int) -> Vector:
    return tuple(ONE if k == index else ZERO for k in range(length))


def add_scaled(target: list, vector: Vector, factor: Any) -> None:
    """In-place target += factor * vector."""
    if not factor:
        return
    for k, coeff in enumerate(vector):
        if coeff:
            target[k] += factor * coeff


def is_zero(vector: Vector) -> bool:
    return not any(vector)

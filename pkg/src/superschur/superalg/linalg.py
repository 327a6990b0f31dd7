"""
Exact linear algebra over QQ.

Thin wrappers around sympy's DomainMatrix that take and return plain
row lists of QQ elements, so the rest of the package never handles
matrix objects directly. Zero-sized shapes are handled here rather
than passed to sympy.
"""

from collections.abc import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .base import ONE, ZERO, Vector

Rows = list[Vector]


def _domain_matrix(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    data = [[QQ.convert(x) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _as_rows(matrix: DomainMatrix) -> Rows:
    return [tuple(row) for row in matrix.to_list()]


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[Rows, tuple[int, ...]]:
    """
    Reduced row-echelon form with zero rows dropped.

    Args:
        rows: Matrix rows
        ncols: Number of columns (needed when rows is empty)

    Returns:
        Tuple of (nonzero RREF rows, pivot columns)
    """
    nonzero = [row for row in rows if any(row)]
    if not nonzero or ncols == 0:
        return [], ()
    reduced, pivots = _domain_matrix(nonzero, ncols).rref()
    return _as_rows(reduced)[: len(pivots)], tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    nonzero = [row for row in rows if any(row)]
    if not nonzero or ncols == 0:
        return 0
    return _domain_matrix(nonzero, ncols).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> Rows:
    """
    Basis of {x : A x = 0}, returned in reduced row-echelon form.

    Args:
        rows: Rows of A
        ncols: Number of columns of A (length of x)
    """
    if ncols == 0:
        return []
    nonzero = [row for row in rows if any(row)]
    if not nonzero:
        return [tuple(ONE if k == i else ZERO for k in range(ncols)) for i in range(ncols)]
    basis = _domain_matrix(nonzero, ncols).nullspace()
    return rref(_as_rows(basis), ncols)[0]


def transpose(rows: Sequence[Sequence], ncols: int) -> Rows:
    return [tuple(row[j] for row in rows) for j in range(ncols)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], inner: int, ncols: int) -> Rows:
    """Product of an (r x inner) and an (inner x ncols) matrix."""
    if not a:
        return []
    if inner == 0 or ncols == 0:
        return [tuple(ZERO for _ in range(ncols)) for _ in a]
    product = _domain_matrix(a, inner).matmul(_domain_matrix(b, ncols))
    return _as_rows(product)


def inverse(rows: Sequence[Sequence]) -> Rows:
    """
    Inverse of a square matrix.

    Raises:
        ValueError: If the matrix is singular
    """
    size = len(rows)
    if size == 0:
        return []
    if rank(rows, size) < size:
        raise ValueError("matrix is singular")
    return _as_rows(_domain_matrix(rows, size).inv())


def reduce_against(vector: Vector, basis: Rows, pivots: tuple[int, ...]) -> Vector:
    """
    Subtract multiples of RREF rows so the vector vanishes on every pivot column.

    The result is zero exactly when the vector lies in the row span.
    """
    reduced = list(vector)
    for row, pivot in zip(basis, pivots):
        factor = reduced[pivot]
        if factor:
            for k, coeff in enumerate(row):
                if coeff:
                    reduced[k] -= factor * coeff
    return tuple(reduced)


def in_span(vector: Vector, basis: Rows, pivots: tuple[int, ...]) -> bool:
    return not any(reduce_against(vector, basis, pivots))

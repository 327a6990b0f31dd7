"""
Degree-2 and degree-3 super-exterior chain spaces and their differentials.

Monomials are canonical: nondecreasing basis indices, with repeated
factors allowed only for odd basis elements. Swapping two adjacent
factors of parities p, q multiplies by -(-1)^{pq}.

Matrices are returned as row lists over QQ, one row per coordinate of
the target space and one column per source monomial.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement

from ..superalg import linalg
from ..superalg.algebra import LieSuperalgebra
from ..superalg.base import (
    ZERO,
    ChainComplexError,
    DimensionMismatch,
    Parity,
    Vector,
    super_sign,
)

log = logging.getLogger(__name__)

WEDGE = "∧"


@dataclass(frozen=True)
class WedgeMonomial2:
    """Canonical basis element e_i ∧ e_j of the exterior square, i <= j."""

    indices: tuple[int, int]
    parity: Parity

    def label(self, names: tuple[str, ...]) -> str:
        i, j = self.indices
        return f"{names[i]}{WEDGE}{names[j]}"


@dataclass(frozen=True)
class WedgeMonomial3:
    """Canonical basis element e_i ∧ e_j ∧ e_k of the exterior cube, i <= j <= k."""

    indices: tuple[int, int, int]
    parity: Parity

    def label(self, names: tuple[str, ...]) -> str:
        return WEDGE.join(names[k] for k in self.indices)


def chain2_basis(L: LieSuperalgebra) -> list[WedgeMonomial2]:
    """
    All pairs i < j plus the odd diagonals i = i, lexicographically.

    The count is ½[(m+n)² + (n-m)].
    """
    return [
        WedgeMonomial2((i, j), L.parity(i) + L.parity(j))
        for i, j in combinations_with_replacement(range(L.dim), 2)
        if i != j or L.parity(i) is Parity.ODD
    ]


def chain3_basis(L: LieSuperalgebra) -> list[WedgeMonomial3]:
    """Nondecreasing triples with no repeated even index, lexicographically."""
    basis = []
    for triple in combinations_with_replacement(range(L.dim), 3):
        i, j, k = triple
        repeats = {x for x, y in ((i, j), (j, k)) if x == y}
        if any(L.parity(x) is Parity.EVEN for x in repeats):
            continue
        basis.append(WedgeMonomial3(triple, L.parity(i) + L.parity(j) + L.parity(k)))
    return basis


def chain2_index(L: LieSuperalgebra) -> dict[tuple[int, int], int]:
    return {mono.indices: pos for pos, mono in enumerate(chain2_basis(L))}


def _canonical_pair(L: LieSuperalgebra, k: int, l: int) -> tuple[tuple[int, int], int] | None:
    """e_k ∧ e_l as (canonical indices, sign), or None when it vanishes."""
    if k < l:
        return (k, l), 1
    if k == l:
        return ((k, k), 1) if L.parity(k) is Parity.ODD else None
    return (l, k), -super_sign(L.parity(k), L.parity(l))


def wedge(
    L: LieSuperalgebra,
    u: Vector,
    v: Vector,
    index: dict[tuple[int, int], int] | None = None,
) -> Vector:
    """
    u ∧ v in canonical chain-2 coordinates (bilinear extension).

    Raises:
        DimensionMismatch: If u or v has the wrong length
    """
    size = L.dim
    if len(u) != size or len(v) != size:
        raise DimensionMismatch(f"wedge expects vectors of length {size}")
    index = index if index is not None else chain2_index(L)
    result = [ZERO] * len(index)
    for k, x in enumerate(u):
        if not x:
            continue
        for l, y in enumerate(v):
            if not y:
                continue
            canon = _canonical_pair(L, k, l)
            if canon is None:
                continue
            pair, sign = canon
            result[index[pair]] += sign * x * y
    return tuple(result)


def d2_matrix(L: LieSuperalgebra) -> list[Vector]:
    """Matrix of x∧y -> [x, y]; rows indexed by the basis of L."""
    basis = chain2_basis(L)
    columns = [L.structure(*mono.indices) for mono in basis]
    return linalg.transpose(columns, L.dim)


def d3_columns(L: LieSuperalgebra) -> list[Vector]:
    """
    Images of the chain-3 monomials under

        d3(x∧y∧z) = [x,y]∧z - (-1)^{|y||z|} [x,z]∧y + (-1)^{|x|(|y|+|z|)} [y,z]∧x
    """
    index = chain2_index(L)
    columns = []
    for mono in chain3_basis(L):
        x, y, z = mono.indices
        px, py, pz = L.parity(x), L.parity(y), L.parity(z)
        column = [ZERO] * len(index)
        terms = (
            (L.structure(x, y), z, 1),
            (L.structure(x, z), y, -super_sign(py, pz)),
            (L.structure(y, z), x, super_sign(px, py + pz)),
        )
        for value, last, sign in terms:
            if not any(value):
                continue
            for k, coeff in enumerate(wedge(L, value, L.basis_vector(last), index)):
                if coeff:
                    column[k] += sign * coeff
        columns.append(tuple(column))
    return columns


def d3_matrix(L: LieSuperalgebra) -> list[Vector]:
    """
    Matrix of the degree-3 boundary; rows indexed by chain-2 monomials.

    Raises:
        ChainComplexError: If d2 * d3 != 0
    """
    n2 = len(chain2_basis(L))
    columns = d3_columns(L)
    d3 = linalg.transpose(columns, n2)
    check_complex(L, d3, len(columns))
    return d3


def check_complex(L: LieSuperalgebra, d3: list[Vector], n3: int) -> None:
    """Assert d2 * d3 = 0 exactly."""
    d2 = d2_matrix(L)
    n2 = len(d3)
    if not n3 or not n2:
        return
    product = linalg.matmul(d2, d3, n2, n3)
    if any(any(row) for row in product):
        raise ChainComplexError(f"d2*d3 != 0 for {L.name}")
    log.debug("%s: chain spaces %d -> %d -> %d, d2*d3 = 0", L.name, n3, n2, L.dim)

"""
Graded subspaces and the structural operations built on them.

Provides the subspace calculus used everywhere else:
- GradedSubspace: RREF coordinate spans split into even and odd parts
- derived subalgebra, lower central series, center
- quotients by graded ideals, direct sums, changes of basis
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import LieSuperalgebra
from .base import (
    ZERO,
    DimensionMismatch,
    NotAnIdealError,
    NotGradedError,
    Parity,
    SchemaError,
    Vector,
    add_scaled,
    to_scalar,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedSubspace:
    """
    A Z2-graded subspace N = N_0 + N_1 of an (m|n)-dimensional algebra.

    Rows are full-length coordinate vectors in reduced row-echelon form;
    even rows are supported on the even block, odd rows on the odd block.
    """

    m: int
    n: int
    even_part: tuple[Vector, ...] = ()
    odd_part: tuple[Vector, ...] = ()

    def __post_init__(self):
        for parity, rows in ((Parity.EVEN, self.even_part), (Parity.ODD, self.odd_part)):
            outside = range(self.m, self.m + self.n) if parity is Parity.EVEN else range(self.m)
            for row in rows:
                if len(row) != self.m + self.n:
                    raise DimensionMismatch(f"row of length {len(row)} in ({self.m}|{self.n}) space")
                if any(row[k] for k in outside):
                    raise NotGradedError(f"{parity.label} part has support outside its block")

    @classmethod
    def span(cls, m: int, n: int, vectors: Iterable[Vector]) -> "GradedSubspace":
        """Graded hull: span of the parity projections of the given vectors."""
        size = m + n
        even_rows, odd_rows = [], []
        for v in vectors:
            if len(v) != size:
                raise DimensionMismatch(f"vector of length {len(v)} in ({m}|{n}) space")
            even_rows.append(tuple(x if k < m else ZERO for k, x in enumerate(v)))
            odd_rows.append(tuple(x if k >= m else ZERO for k, x in enumerate(v)))
        return cls(
            m,
            n,
            tuple(linalg.rref(even_rows, size)[0]),
            tuple(linalg.rref(odd_rows, size)[0]),
        )

    @classmethod
    def zero(cls, m: int, n: int) -> "GradedSubspace":
        return cls(m, n)

    @classmethod
    def whole(cls, L: LieSuperalgebra) -> "GradedSubspace":
        return cls.span(L.m, L.n, (L.basis_vector(k) for k in range(L.dim)))

    @property
    def dims(self) -> tuple[int, int]:
        return (len(self.even_part), len(self.odd_part))

    @property
    def dim(self) -> int:
        return len(self.even_part) + len(self.odd_part)

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self.even_part + self.odd_part

    def is_zero(self) -> bool:
        return self.dim == 0

    def part(self, parity: Parity) -> tuple[Vector, ...]:
        return self.even_part if parity is Parity.EVEN else self.odd_part

    def _pivots(self, parity: Parity) -> tuple[int, ...]:
        return tuple(next(k for k, x in enumerate(row) if x) for row in self.part(parity))

    def pivots(self) -> tuple[int, ...]:
        return self._pivots(Parity.EVEN) + self._pivots(Parity.ODD)

    def reduce(self, vector: Vector) -> Vector:
        """Reduce a vector modulo the subspace (zero on every pivot column)."""
        reduced = linalg.reduce_against(vector, list(self.even_part), self._pivots(Parity.EVEN))
        return linalg.reduce_against(reduced, list(self.odd_part), self._pivots(Parity.ODD))

    def contains(self, vector: Vector) -> bool:
        return not any(self.reduce(vector))

    def contains_subspace(self, other: "GradedSubspace") -> bool:
        return all(self.contains(row) for row in other.rows)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace.span(self.m, self.n, self.rows + other.rows)

    def intersection_dims(self, other: "GradedSubspace") -> tuple[int, int]:
        """Graded dimensions of the intersection, by dim A + dim B - dim(A+B)."""
        total = self + other
        return (
            len(self.even_part) + len(other.even_part) - len(total.even_part),
            len(self.odd_part) + len(other.odd_part) - len(total.odd_part),
        )

    def is_ideal(self, L: LieSuperalgebra) -> bool:
        return all(
            self.contains(L.bracket(row, L.basis_vector(j))) for row in self.rows for j in range(L.dim)
        )

    def format(self, L: LieSuperalgebra) -> str:
        if self.is_zero():
            return "0"
        return "<" + ", ".join(L.format_vector(row) for row in self.rows) + ">"


def graded_span(L: LieSuperalgebra, vectors: Iterable[Vector]) -> GradedSubspace:
    return GradedSubspace.span(L.m, L.n, vectors)


def ideal_from_vectors(L: LieSuperalgebra, vectors: Sequence[Vector]) -> GradedSubspace:
    """
    Span of the given vectors, checked to be a graded ideal.

    Raises:
        NotGradedError: If the span is not closed under parity projection
        NotAnIdealError: If [I, L] is not contained in I
    """
    hull = graded_span(L, vectors)
    plain_rank = linalg.rank(list(vectors), L.dim)
    if plain_rank != hull.dim:
        raise NotGradedError(f"not graded: span has dimension {plain_rank}, graded hull {hull.dim}")
    if not hull.is_ideal(L):
        raise NotAnIdealError()
    return hull


# === DERIVED DATA ===


def derived_subalgebra(L: LieSuperalgebra) -> GradedSubspace:
    """L^2 = [L, L]; its graded dimensions are the pair (r, s)."""
    return graded_span(L, L.brackets.values())


def _bracket_with_algebra(L: LieSuperalgebra, term: GradedSubspace) -> GradedSubspace:
    return graded_span(
        L, (L.bracket(row, L.basis_vector(j)) for row in term.rows for j in range(L.dim))
    )


def lower_central_series(L: LieSuperalgebra) -> list[GradedSubspace]:
    """
    Descending central series L^1 = L, L^{k+1} = [L^k, L].

    Stops at the first zero term, or when a nonzero term repeats (not
    nilpotent), or after m+n+1 steps.
    """
    series = [GradedSubspace.whole(L)]
    for _ in range(L.dim + 1):
        current = series[-1]
        following = _bracket_with_algebra(L, current)
        if following.dim == current.dim:
            break
        series.append(following)
        if following.is_zero():
            break
    return series


def is_nilpotent(L: LieSuperalgebra) -> bool:
    return lower_central_series(L)[-1].is_zero()


def nilpotency_class(L: LieSuperalgebra) -> int | None:
    """Last k with L^k != 0, or None when L is not nilpotent."""
    series = lower_central_series(L)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def is_abelian(L: LieSuperalgebra) -> bool:
    return not L.brackets


def center(L: LieSuperalgebra) -> GradedSubspace:
    """Z(L) = {z : [z, x] = 0 for all x}, computed per parity block."""
    size = L.dim
    parts: dict[Parity, list[Vector]] = {}
    for parity in Parity:
        block = list(L.block(parity))
        equations = []
        for j in range(size):
            for k in range(size):
                equations.append(tuple(L.structure(i, j)[k] for i in block))
        solutions = linalg.nullspace(equations, len(block))
        rows = []
        for sol in solutions:
            full = [ZERO] * size
            for coeff, i in zip(sol, block):
                full[i] = coeff
            rows.append(tuple(full))
        parts[parity] = rows
    return GradedSubspace(
        L.m,
        L.n,
        tuple(linalg.rref(parts[Parity.EVEN], size)[0]),
        tuple(linalg.rref(parts[Parity.ODD], size)[0]),
    )


def is_maximal_class(L: LieSuperalgebra) -> bool:
    """dim L^2 = m + n - 2."""
    return derived_subalgebra(L).dim == L.dim - 2


def is_trivial_ls(L: LieSuperalgebra) -> bool:
    """[L_1, L_1] = 0."""
    return not any(L.parity(i) is Parity.ODD for i, _ in L.brackets)


# === CONSTRUCTIONS ===


def complement_indices(I: GradedSubspace) -> list[int]:
    """Non-pivot coordinates of the ideal's RREF (even block first)."""
    pivots = set(I.pivots())
    return [k for k in range(I.m + I.n) if k not in pivots]


def projection(L: LieSuperalgebra, I: GradedSubspace) -> list[Vector]:
    """Images of the basis of L in the quotient basis of L/I."""
    keep = complement_indices(I)
    return [tuple(I.reduce(L.basis_vector(k))[c] for c in keep) for k in range(L.dim)]


def quotient(L: LieSuperalgebra, I: GradedSubspace) -> LieSuperalgebra:
    """
    Structure constants of L/I on the complement basis of I.

    Raises:
        NotAnIdealError: If [I, L] is not contained in I
    """
    if (I.m, I.n) != L.dims:
        raise DimensionMismatch(f"subspace of ({I.m}|{I.n}) does not live in {L.name}")
    if not I.is_ideal(L):
        raise NotAnIdealError()
    keep = complement_indices(I)
    brackets: dict[tuple[int, int], Vector] = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep[a:], start=a):
            if i == j and L.parity(i) is Parity.EVEN:
                continue
            value = I.reduce(L.structure(i, j))
            image = tuple(value[c] for c in keep)
            if any(image):
                brackets[(a, b)] = image
    even = tuple(L.names[k] for k in keep if k < L.m)
    odd = tuple(L.names[k] for k in keep if k >= L.m)
    name = L.name if I.is_zero() else f"{L.name}/{I.format(L)}"
    return LieSuperalgebra(name, even, odd, brackets)


def _unique_names(taken: Sequence[str], names: Sequence[str]) -> list[str]:
    used = set(taken)
    renamed = []
    for label in names:
        while label in used:
            label = label + "'"
        used.add(label)
        renamed.append(label)
    return renamed


def direct_sum(L: LieSuperalgebra, K: LieSuperalgebra) -> LieSuperalgebra:
    """
    L + K with bases concatenated per parity and zero cross brackets.

    Clashing labels of K get primes appended.
    """
    k_names = _unique_names(L.names, K.names)
    k_even, k_odd = k_names[: K.m], k_names[K.m :]
    m, n = L.m + K.m, L.n + K.n

    def place_l(k: int) -> int:
        return k if k < L.m else k + K.m

    def place_k(k: int) -> int:
        return L.m + k if k < K.m else m + L.n + (k - K.m)

    brackets: dict[tuple[int, int], Vector] = {}
    for source, place in ((L, place_l), (K, place_k)):
        for (i, j), value in source.brackets.items():
            vector = [ZERO] * (m + n)
            for k, x in enumerate(value):
                vector[place(k)] = x
            brackets[(place(i), place(j))] = tuple(vector)
    return LieSuperalgebra(
        f"{L.name}⊕{K.name}",
        L.even_names + tuple(k_even),
        L.odd_names + tuple(k_odd),
        brackets,
    )


def change_basis(
    L: LieSuperalgebra,
    even_matrix: Sequence[Sequence],
    odd_matrix: Sequence[Sequence],
) -> LieSuperalgebra:
    """
    Rewrite L in a new homogeneous basis.

    Column k of each block matrix holds the k-th new basis vector of that
    parity in old coordinates.

    Raises:
        DimensionMismatch: If a block has the wrong shape
        SchemaError: If a block is singular
    """
    if len(even_matrix) != L.m or any(len(r) != L.m for r in even_matrix):
        raise DimensionMismatch(f"even block must be {L.m}x{L.m}")
    if len(odd_matrix) != L.n or any(len(r) != L.n for r in odd_matrix):
        raise DimensionMismatch(f"odd block must be {L.n}x{L.n}")
    size = L.dim
    full = [[ZERO] * size for _ in range(size)]
    for r in range(L.m):
        for c in range(L.m):
            full[r][c] = to_scalar(even_matrix[r][c])
    for r in range(L.n):
        for c in range(L.n):
            full[L.m + r][L.m + c] = to_scalar(odd_matrix[r][c])
    try:
        inv = linalg.inverse(full)
    except ValueError:
        raise SchemaError("change of basis is singular") from None

    columns = [tuple(full[r][c] for r in range(size)) for c in range(size)]
    brackets: dict[tuple[int, int], Vector] = {}
    for i in range(size):
        for j in range(i, size):
            if i == j and L.parity(i) is Parity.EVEN:
                continue
            old = L.bracket(columns[i], columns[j])
            new = [ZERO] * size
            for r in range(size):
                add_scaled(new, tuple(row[r] for row in inv), old[r])
            if any(new):
                brackets[(i, j)] = tuple(new)
    return LieSuperalgebra(L.name, L.even_names, L.odd_names, brackets)


def random_block(rng: np.random.Generator, size: int, bound: int) -> list[list[int]]:
    """Random invertible integer matrix with entries in [-bound, bound]."""
    while True:
        block = rng.integers(-bound, bound + 1, size=(size, size)).tolist()
        if linalg.rank(block, size) == size:
            return block


def random_basis_change(L: LieSuperalgebra, rng: np.random.Generator, bound: int = 3) -> LieSuperalgebra:
    """Apply a random invertible parity-preserving change of basis."""
    return change_basis(L, random_block(rng, L.m, bound), random_block(rng, L.n, bound))

"""
Schur multiplier M(L) = ker d2 / im d3 with its even/odd split.

Provides:
- schur_multiplier: the chain engine, with representative cycles
- schur_multiplier_cochain_oracle: an independent count through
  super-antisymmetric 2-cocycles modulo coboundaries
- checked_multiplier: both engines, compared
- induced_multiplier_map: M(L) -> M(L/N) for a central graded ideal N
"""

import logging
from dataclasses import dataclass, field
from itertools import product

from ..superalg import linalg
from ..superalg.algebra import LieSuperalgebra
from ..superalg.base import (
    ZERO,
    DimensionMismatch,
    EngineDisagreement,
    NotCentralError,
    NotGradedError,
    Parity,
    Vector,
    format_scalar,
    super_sign,
)
from ..superalg.subspace import (
    GradedSubspace,
    derived_subalgebra,
    projection,
    quotient,
)
from .chains import (
    WedgeMonomial2,
    chain2_basis,
    chain2_index,
    d2_matrix,
    d3_matrix,
    wedge,
)

log = logging.getLogger(__name__)


# === RESULT TYPES ===


@dataclass(frozen=True)
class ParityBlock:
    """Cycles, boundaries and representatives of one parity of M(L)."""

    parity: Parity
    cycle_dim: int
    boundary_rows: tuple[Vector, ...]  # RREF, full chain-2 length
    boundary_pivots: tuple[int, ...]
    representatives: tuple[Vector, ...]  # RREF of cycles reduced modulo boundaries
    representative_pivots: tuple[int, ...]

    @property
    def boundary_dim(self) -> int:
        return len(self.boundary_rows)

    @property
    def dim(self) -> int:
        return len(self.representatives)


@dataclass(frozen=True)
class MultiplierResult:
    """
    Graded dimensions (a|b) of M(L) with representative cycles.

    M(L) is abelian, so its isomorphism type is A(a|b).
    """

    algebra_name: str
    names: tuple[str, ...]
    monomials: tuple[WedgeMonomial2, ...]
    even: ParityBlock
    odd: ParityBlock

    @property
    def even_dim(self) -> int:
        return self.even.dim

    @property
    def odd_dim(self) -> int:
        return self.odd.dim

    @property
    def dims(self) -> tuple[int, int]:
        return (self.even_dim, self.odd_dim)

    @property
    def total(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def type_label(self) -> str:
        return f"A({self.even_dim}|{self.odd_dim})"

    def block(self, parity: Parity) -> ParityBlock:
        return self.even if parity is Parity.EVEN else self.odd

    @property
    def representatives(self) -> list[tuple[Parity, Vector]]:
        """Representative cycles, even ones first."""
        return [(block.parity, rep) for block in (self.even, self.odd) for rep in block.representatives]

    def coordinates(self, cycle: Vector) -> tuple:
        """
        Coordinates of a cycle's class in the representative basis.

        Args:
            cycle: Chain-2 vector in the kernel of d2

        Returns:
            Tuple of even coordinates followed by odd coordinates
        """
        if len(cycle) != len(self.monomials):
            raise DimensionMismatch(f"cycle of length {len(cycle)}, expected {len(self.monomials)}")
        coords = []
        for block in (self.even, self.odd):
            part = tuple(
                x if self.monomials[k].parity is block.parity else ZERO for k, x in enumerate(cycle)
            )
            reduced = linalg.reduce_against(part, list(block.boundary_rows), block.boundary_pivots)
            coords.extend(reduced[p] for p in block.representative_pivots)
        return tuple(coords)

    def format_chain(self, chain: Vector) -> str:
        terms = []
        for mono, coeff in zip(self.monomials, chain):
            if not coeff:
                continue
            label = mono.label(self.names)
            if coeff == 1:
                terms.append(label)
            elif coeff == -1:
                terms.append(f"-{label}")
            else:
                terms.append(f"{format_scalar(coeff)}{label}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def format_representatives(self) -> dict[str, list[str]]:
        """Representatives in wedge notation keyed by "even"/"odd"."""
        return {
            block.parity.label: [self.format_chain(rep) for rep in block.representatives]
            for block in (self.even, self.odd)
        }

    def __str__(self):
        reps = self.format_representatives()
        parts = [self.type_label]
        for label in ("odd", "even"):
            if reps[label]:
                parts.append(f"{label}: {', '.join(reps[label])}")
        return "; ".join(parts)


# === CHAIN ENGINE ===


def _parity_block(
    parity: Parity,
    monomials: list[WedgeMonomial2],
    d2: list[Vector],
    d3_columns: list[Vector],
    d3_parities: list[Parity],
) -> ParityBlock:
    n2 = len(monomials)
    positions = [k for k, mono in enumerate(monomials) if mono.parity is parity]

    restricted = [tuple(row[k] for k in positions) for row in d2]
    cycles = []
    for sol in linalg.nullspace(restricted, len(positions)):
        full = [ZERO] * n2
        for coeff, k in zip(sol, positions):
            full[k] = coeff
        cycles.append(tuple(full))

    boundaries, boundary_pivots = linalg.rref(
        [col for col, p in zip(d3_columns, d3_parities) if p is parity], n2
    )
    reduced = [linalg.reduce_against(c, boundaries, boundary_pivots) for c in cycles]
    reps, rep_pivots = linalg.rref(reduced, n2)

    if len(reps) != len(cycles) - len(boundaries):
        raise EngineDisagreement(
            f"{parity.label} boundaries are not contained in cycles "
            f"({len(cycles)} cycles, {len(boundaries)} boundaries, {len(reps)} classes)"
        )
    return ParityBlock(
        parity=parity,
        cycle_dim=len(cycles),
        boundary_rows=tuple(boundaries),
        boundary_pivots=boundary_pivots,
        representatives=tuple(reps),
        representative_pivots=rep_pivots,
    )


def schur_multiplier(L: LieSuperalgebra) -> MultiplierResult:
    """
    Compute M(L) as cycles modulo boundaries, blockwise per parity.

    Representatives are the RREF of a cycle basis reduced modulo the RREF
    of the boundaries.
    """
    monomials = chain2_basis(L)
    d2 = d2_matrix(L)
    d3 = d3_matrix(L)
    n3 = len(d3[0]) if d3 else 0
    columns = linalg.transpose(d3, n3) if d3 else []

    # Parity of a boundary column is the parity of any monomial in its support
    col_parities = []
    for col in columns:
        support = next((k for k, x in enumerate(col) if x), None)
        col_parities.append(monomials[support].parity if support is not None else Parity.EVEN)

    even = _parity_block(Parity.EVEN, monomials, d2, columns, col_parities)
    odd = _parity_block(Parity.ODD, monomials, d2, columns, col_parities)
    result = MultiplierResult(L.name, L.names, tuple(monomials), even, odd)
    log.debug(
        "%s: cycles (%d|%d), boundaries (%d|%d), M = %s",
        L.name,
        even.cycle_dim,
        odd.cycle_dim,
        even.boundary_dim,
        odd.boundary_dim,
        result.type_label,
    )
    return result


# === COCHAIN ORACLE ===


def _cocycle_dims(L: LieSuperalgebra, parity: Parity) -> tuple[int, int]:
    size = L.dim
    pairs = [
        (i, j) for i, j in product(range(size), repeat=2) if L.parity(i) + L.parity(j) is parity
    ]
    unknown = {pair: k for k, pair in enumerate(pairs)}
    width = len(pairs)
    if not width:
        return 0, 0

    constraints: list[Vector] = []
    for i, j in pairs:
        row = [ZERO] * width
        row[unknown[(i, j)]] += 1
        row[unknown[(j, i)]] += super_sign(L.parity(i), L.parity(j))
        constraints.append(tuple(row))

    for x, y, z in product(range(size), repeat=3):
        px, py, pz = L.parity(x), L.parity(y), L.parity(z)
        if px + py + pz is not parity:
            continue
        row = [ZERO] * width
        terms = (
            (L.structure(x, y), z, 1),
            (L.structure(x, z), y, -super_sign(py, pz)),
            (L.structure(y, z), x, super_sign(px, py + pz)),
        )
        for value, last, sign in terms:
            for l, coeff in enumerate(value):
                if coeff and (l, last) in unknown:
                    row[unknown[(l, last)]] += sign * coeff
        constraints.append(tuple(row))

    cocycles = len(linalg.nullspace(constraints, width))
    coboundaries = linalg.rank(
        [tuple(L.structure(i, j)[k] for i, j in pairs) for k in L.block(parity)],
        width,
    )
    return cocycles, coboundaries


def schur_multiplier_cochain_oracle(L: LieSuperalgebra) -> tuple[int, int]:
    """
    Graded dimensions of M(L) through the dual complex.

    Unknowns are the values f(e_i, e_j) on ordered basis pairs of parity
    eps. Constraints are super-antisymmetry and the 2-cocycle identity

        f([x,y],z) - (-1)^{|y||z|} f([x,z],y) + (-1)^{|x|(|y|+|z|)} f([y,z],x) = 0

    on every ordered triple. Coboundaries are g∘[,] for the coordinate
    functionals g of parity eps.

    Returns:
        Tuple of (even_dim, odd_dim)
    """
    dims = []
    for parity in Parity:
        cocycles, coboundaries = _cocycle_dims(L, parity)
        dims.append(cocycles - coboundaries)
    log.debug("%s: cochain oracle gives (%d|%d)", L.name, dims[0], dims[1])
    return dims[0], dims[1]


def checked_multiplier(L: LieSuperalgebra) -> MultiplierResult:
    """
    Chain engine result, cross-checked against the cochain oracle.

    Raises:
        EngineDisagreement: If the two engines give different dims
    """
    result = schur_multiplier(L)
    oracle = schur_multiplier_cochain_oracle(L)
    if result.dims != oracle:
        raise EngineDisagreement(
            f"{L.name}: chain engine gives {result.dims}, cochain oracle gives {oracle}"
        )
    return result


# === INDUCED MAPS ===


@dataclass
class InducedMap:
    """M(L) -> M(L/N) for a central graded ideal N."""

    source: MultiplierResult
    target: MultiplierResult
    quotient: LieSuperalgebra
    matrix: list[Vector]  # rows: target representatives, columns: source representatives
    rank: int
    intersection_dims: tuple[int, int]  # graded dims of N ∩ L^2
    notes: list[str] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return self.rank == self.source.total

    @property
    def kernel_dim(self) -> int:
        return self.source.total - self.rank

    @property
    def coker_dim(self) -> int:
        return self.target.total - self.rank

    @property
    def intersection_dim(self) -> int:
        return sum(self.intersection_dims)

    def dimension_law_holds(self) -> bool:
        """Injective implies dim M(L/N) - dim M(L) = dim(N ∩ L^2)."""
        if not self.injective:
            return True
        return self.target.total - self.source.total == self.intersection_dim


def _check_central(L: LieSuperalgebra, N: GradedSubspace) -> None:
    for row in N.rows:
        for j in range(L.dim):
            value = L.bracket(row, L.basis_vector(j))
            if any(value):
                raise NotCentralError(
                    f"N not central: [{L.format_vector(row)},{L.names[j]}] = {L.format_vector(value)}"
                )


def induced_multiplier_map(L: LieSuperalgebra, N: GradedSubspace) -> InducedMap:
    """
    Map on multipliers induced by the projection L -> L/N.

    Applies Λ²π to each representative of M(L) and reads off its
    coordinates in M(L/N).

    Raises:
        NotGradedError: If N does not live in L's graded coordinates
        NotCentralError: If [N, L] != 0, naming the nonzero bracket
    """
    if (N.m, N.n) != L.dims:
        raise NotGradedError(f"N not graded ideal: subspace of ({N.m}|{N.n}) in {L.dims}")
    _check_central(L, N)

    source = schur_multiplier(L)
    Q = quotient(L, N)
    target = schur_multiplier(Q)
    images = projection(L, N)
    q_index = chain2_index(Q)

    pushed = [wedge(Q, images[i], images[j], q_index) for i, j in (m.indices for m in source.monomials)]
    columns = []
    for _, rep in source.representatives:
        image = [ZERO] * len(q_index)
        for coeff, column in zip(rep, pushed):
            if coeff:
                for k, x in enumerate(column):
                    if x:
                        image[k] += coeff * x
        columns.append(target.coordinates(tuple(image)))

    matrix = linalg.transpose(columns, target.total)
    induced = InducedMap(
        source=source,
        target=target,
        quotient=Q,
        matrix=matrix,
        rank=linalg.rank(columns, target.total),
        intersection_dims=N.intersection_dims(derived_subalgebra(L)),
    )
    if induced.coker_dim != induced.intersection_dim:
        raise EngineDisagreement(
            f"{L.name}: cokernel {induced.coker_dim} != dim(N ∩ L^2) {induced.intersection_dim}"
        )
    log.debug(
        "%s -> %s: rank %d, kernel %d, cokernel %d",
        L.name,
        Q.name,
        induced.rank,
        induced.kernel_dim,
        induced.coker_dim,
    )
    return induced

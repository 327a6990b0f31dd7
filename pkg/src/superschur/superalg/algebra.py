"""
Finite-dimensional Lie superalgebras given by structure constants.

The basis is ordered even block first, then odd block. Only brackets
[e_i, e_j] with i <= j are stored; the rest follow from graded
antisymmetry [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]. Diagonal entries are
only stored for odd basis elements (even squares are zero).
"""

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from itertools import product
from typing import Any

from .base import (
    MAX_TOTAL_DIM,
    ZERO,
    DimensionMismatch,
    Parity,
    SchemaError,
    Vector,
    add_scaled,
    format_scalar,
    super_sign,
    to_scalar,
    unit_vector,
    zero_vector,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LieSuperalgebra:
    """
    Structure-constant model of an (m|n)-dimensional Lie superalgebra.

    Attributes:
        name: Display name (e.g. "L_{1,2}^{(3)}")
        even_names: Labels of the m even basis elements
        odd_names: Labels of the n odd basis elements
        brackets: Map (i, j), i <= j, to the coordinate vector of [e_i, e_j].
                  Unlisted pairs denote the zero bracket.
    """

    name: str
    even_names: tuple[str, ...]
    odd_names: tuple[str, ...]
    brackets: Mapping[tuple[int, int], Vector] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "even_names", tuple(self.even_names))
        object.__setattr__(self, "odd_names", tuple(self.odd_names))
        size = self.dim
        if size < 1:
            raise SchemaError("algebra must have m+n >= 1")
        if size > MAX_TOTAL_DIM:
            raise SchemaError(f"dimension {size} exceeds limit {MAX_TOTAL_DIM}")
        names = self.names
        if len(set(names)) != len(names):
            raise SchemaError(f"duplicate basis names in {names}")

        cleaned: dict[tuple[int, int], Vector] = {}
        for (i, j), value in self.brackets.items():
            if not (0 <= i <= j < size):
                raise SchemaError(f"bracket key ({i}, {j}) must satisfy 0 <= i <= j < {size}")
            if i == j and self.parity(i) is Parity.EVEN:
                raise SchemaError(
                    f"even square [{names[i]},{names[i]}] cannot be stored (it is zero)"
                )
            if len(value) != size:
                raise DimensionMismatch(
                    f"bracket [{names[i]},{names[j]}] has length {len(value)}, expected {size}"
                )
            vector = tuple(to_scalar(x) for x in value)
            if any(vector):
                cleaned[(i, j)] = vector
        object.__setattr__(self, "brackets", dict(sorted(cleaned.items())))

    # === BASIS ===

    @property
    def m(self) -> int:
        return len(self.even_names)

    @property
    def n(self) -> int:
        return len(self.odd_names)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def dim(self) -> int:
        return self.m + self.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.even_names + self.odd_names

    def parity(self, index: int) -> Parity:
        return Parity.EVEN if index < self.m else Parity.ODD

    def block(self, parity: Parity) -> range:
        """Coordinate indices of a parity block."""
        return range(0, self.m) if parity is Parity.EVEN else range(self.m, self.dim)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown basis element {name!r} in {self.name}") from None

    def basis_vector(self, index: int) -> Vector:
        return unit_vector(self.dim, index)

    def vector_parity(self, vector: Vector) -> Parity | None:
        """Parity of a nonzero homogeneous vector, None for zero or inhomogeneous."""
        even = any(vector[k] for k in self.block(Parity.EVEN))
        odd = any(vector[k] for k in self.block(Parity.ODD))
        if even == odd:
            return None
        return Parity.EVEN if even else Parity.ODD

    # === BRACKETS ===

    def structure(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any ordered pair, using graded antisymmetry for i > j."""
        if i <= j:
            return self.brackets.get((i, j), zero_vector(self.dim))
        stored = self.brackets.get((j, i))
        if stored is None:
            return zero_vector(self.dim)
        sign = -super_sign(self.parity(i), self.parity(j))
        return tuple(sign * x for x in stored)

    def bracket(self, u: Vector, v: Vector) -> Vector:
        """
        Bilinear extension of the structure constants.

        Args:
            u: Coordinate vector of length m+n
            v: Coordinate vector of length m+n

        Raises:
            DimensionMismatch: If either vector has the wrong length
        """
        size = self.dim
        if len(u) != size or len(v) != size:
            raise DimensionMismatch(
                f"bracket expects vectors of length {size}, got {len(u)} and {len(v)}"
            )
        result = [ZERO] * size
        for i, j in product(range(size), repeat=2):
            if u[i] and v[j]:
                add_scaled(result, self.structure(i, j), u[i] * v[j])
        return tuple(result)

    def nonzero_pairs(self) -> Iterator[tuple[int, int]]:
        yield from self.brackets

    # === DISPLAY ===

    def format_vector(self, vector: Vector) -> str:
        """Render a coordinate vector as a linear combination of basis names."""
        terms = []
        for k, coeff in enumerate(vector):
            if not coeff:
                continue
            name = self.names[k]
            if coeff == 1:
                term = name
            elif coeff == -1:
                term = f"-{name}"
            else:
                term = f"{format_scalar(coeff)}{name}"
            terms.append(term)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def relations(self) -> list[str]:
        """Nonzero stored brackets as "[x,y]=value" strings."""
        return [
            f"[{self.names[i]},{self.names[j]}]={self.format_vector(value)}"
            for (i, j), value in self.brackets.items()
        ]

    def __str__(self):
        rel = ", ".join(self.relations()) or "abelian"
        return f"{self.name} ({self.m}|{self.n}): {rel}"

    # === CONSTRUCTION ===

    @classmethod
    def from_table(
        cls,
        name: str,
        even_names: list[str] | tuple[str, ...],
        odd_names: list[str] | tuple[str, ...],
        table: Mapping[tuple[str, str], Mapping[str, Any]],
    ) -> "LieSuperalgebra":
        """
        Build an algebra from named brackets, e.g. {("a", "β"): {"α": 1}}.

        Pairs may be given in either order; the stored i <= j form is derived
        with graded antisymmetry.

        Raises:
            SchemaError: Unknown names or a pair given twice
        """
        names = tuple(even_names) + tuple(odd_names)
        m = len(even_names)
        lookup = {label: k for k, label in enumerate(names)}
        brackets: dict[tuple[int, int], Vector] = {}
        for (left, right), value in table.items():
            if left not in lookup or right not in lookup:
                raise SchemaError(f"unknown basis name in bracket [{left},{right}]")
            i, j = lookup[left], lookup[right]
            vector = [ZERO] * len(names)
            for target, coeff in value.items():
                if target not in lookup:
                    raise SchemaError(f"unknown basis name {target!r} in [{left},{right}]")
                vector[lookup[target]] += to_scalar(coeff)
            if i > j:
                pi, pj = int(i >= m), int(j >= m)
                sign = -super_sign(pi, pj)
                vector = [sign * x for x in vector]
                i, j = j, i
            if (i, j) in brackets:
                raise SchemaError(f"pair [{names[i]},{names[j]}] given more than once")
            brackets[(i, j)] = tuple(vector)
        return cls(name, tuple(even_names), tuple(odd_names), brackets)


@dataclass
class Violation:
    """A single axiom failure on basis elements."""

    axiom: str  # "homogeneity", "antisymmetry", "even_square" or "jacobi"
    indices: tuple[int, ...]
    labels: tuple[str, ...]
    defect: str

    def __str__(self):
        return f"{self.axiom} at ({', '.join(self.labels)}): defect {self.defect}"


@dataclass
class ValidationReport:
    """Outcome of checking the Lie superalgebra axioms on all basis elements."""

    homogeneity_ok: bool
    antisymmetry_ok: bool
    even_square_ok: bool
    jacobi_ok: bool
    violations: list[Violation] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.homogeneity_ok and self.antisymmetry_ok and self.even_square_ok and self.jacobi_ok


def validate(L: LieSuperalgebra) -> ValidationReport:
    """
    Check the axioms of a Lie superalgebra on all basis elements.

    Checks parity homogeneity of each stored bracket, graded antisymmetry,
    [x,x] = 0 for even x and the super Jacobi identity
    [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] on all ordered triples.
    Failures are reported, never raised.
    """
    violations: list[Violation] = []
    size = L.dim
    names = L.names
    e = [L.basis_vector(k) for k in range(size)]

    def record(axiom: str, indices: tuple[int, ...], defect: Vector) -> None:
        violations.append(
            Violation(axiom, indices, tuple(names[k] for k in indices), L.format_vector(defect))
        )

    homogeneity_ok = True
    for (i, j), value in L.brackets.items():
        target = L.parity(i) + L.parity(j)
        wrong = tuple(
            x if L.parity(k) is not target else ZERO for k, x in enumerate(value)
        )
        if any(wrong):
            homogeneity_ok = False
            record("homogeneity", (i, j), wrong)

    antisymmetry_ok = True
    for i, j in product(range(size), repeat=2):
        if i > j:
            continue
        sign = super_sign(L.parity(i), L.parity(j))
        defect = tuple(
            x + sign * y for x, y in zip(L.bracket(e[j], e[i]), L.bracket(e[i], e[j]))
        )
        if any(defect):
            antisymmetry_ok = False
            record("antisymmetry", (i, j), defect)

    even_square_ok = True
    for i in L.block(Parity.EVEN):
        square = L.bracket(e[i], e[i])
        if any(square):
            even_square_ok = False
            record("even_square", (i,), square)

    jacobi_ok = True
    for x, y, z in product(range(size), repeat=3):
        lhs = L.bracket(e[x], L.structure(y, z))
        first = L.bracket(L.structure(x, y), e[z])
        second = L.bracket(e[y], L.structure(x, z))
        sign = super_sign(L.parity(x), L.parity(y))
        defect = tuple(a - b - sign * c for a, b, c in zip(lhs, first, second))
        if any(defect):
            jacobi_ok = False
            record("jacobi", (x, y, z), defect)

    report = ValidationReport(
        homogeneity_ok=homogeneity_ok,
        antisymmetry_ok=antisymmetry_ok,
        even_square_ok=even_square_ok,
        jacobi_ok=jacobi_ok,
        violations=violations,
    )
    if not report.accepted:
        log.debug("%s failed validation with %d violation(s)", L.name, len(violations))
    return report


def bracket(L: LieSuperalgebra, u: Vector, v: Vector) -> Vector:
    """Module-level alias for LieSuperalgebra.bracket."""
    return L.bracket(u, v)

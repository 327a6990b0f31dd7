"""
Classification and capability layer.

- Fingerprints: isomorphism invariants standing in for isomorphism tests
- classify_maximal_class: s-bucket placement with fingerprint matching
- proposition_p1_predicate: dim L^2 = dim M(L) = m+n-2 and m+n <= 5
- capability_report: epicenter membership evidence for central lines

Three tiers are kept apart: the s-bucket (exact arithmetic), fingerprint
matches (evidence) and isomorphism (never claimed).
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .catalog import CatalogAccessor, default_catalog
from .homology import MultiplierResult, induced_multiplier_map, schur_multiplier
from .invariants import s_invariant
from .superalg import (
    LieSuperalgebra,
    NotCentralError,
    NotGradedError,
    PreconditionError,
    Vector,
    center,
    derived_subalgebra,
    graded_span,
    is_abelian,
    is_maximal_class,
    is_nilpotent,
    is_trivial_ls,
    nilpotency_class,
    random_basis_change,
    validate,
)

log = logging.getLogger(__name__)

P1_CANDIDATES = ("L_{2,2}^{(9)}", "3A_{1,1}+2A", "(D^{15}+A_{1,1})^3")

MATCH_DISCLAIMER = "fingerprint-level match, not an isomorphism proof"

EXHAUSTIVE_NOTE = (
    "conclusive only if every homogeneous central direction is spanned by a tested "
    "candidate (true when each parity part of Z(L) is at most 1-dimensional)"
)


# === FINGERPRINTS ===


@dataclass(frozen=True)
class Fingerprint:
    """Invariants under parity-preserving changes of basis."""

    dims: tuple[int, int]
    derived_dims: tuple[int, int]
    nilpotency_class: int | None
    center_dims: tuple[int, int]
    multiplier_dims: tuple[int, int]
    trivial_ls: bool


def fingerprint(L: LieSuperalgebra, multiplier: MultiplierResult | None = None) -> Fingerprint:
    multiplier = multiplier if multiplier is not None else schur_multiplier(L)
    return Fingerprint(
        dims=L.dims,
        derived_dims=derived_subalgebra(L).dims,
        nilpotency_class=nilpotency_class(L),
        center_dims=center(L).dims,
        multiplier_dims=multiplier.dims,
        trivial_ls=is_trivial_ls(L),
    )


def fingerprint_changes(
    L: LieSuperalgebra, rng: np.random.Generator, trials: int, bound: int = 3
) -> list[tuple[LieSuperalgebra, Fingerprint]]:
    """Random basis changes of L whose fingerprint differs from L's (empty when invariant)."""
    reference = fingerprint(L)
    changed = []
    for _ in range(trials):
        K = random_basis_change(L, rng, bound)
        fp = fingerprint(K)
        if fp != reference:
            changed.append((K, fp))
    return changed


# === CLASSIFICATION ===


@dataclass
class Classification:
    """s-bucket placement of a maximal-class algebra."""

    name: str
    s: int
    bucket_members: list[str]
    fingerprint_matches: list[str]
    disclaimer: str = MATCH_DISCLAIMER
    notes: list[str] = field(default_factory=list)


def _check_classifiable(L: LieSuperalgebra) -> None:
    if not validate(L).accepted:
        raise PreconditionError("axioms violated")
    if not is_nilpotent(L):
        raise PreconditionError("not nilpotent")
    if is_abelian(L):
        raise PreconditionError("non-abelian required")
    if not is_maximal_class(L):
        raise PreconditionError("not maximal class")
    if L.dim < 3:
        raise PreconditionError("m+n >= 3 required")
    if L.dim > 5:
        raise PreconditionError("m+n <= 5 required")


def classify_maximal_class(
    L: LieSuperalgebra,
    key: str | None = None,
    catalog: CatalogAccessor | None = None,
) -> Classification:
    """
    Place L in the s-bucket determined by its computed multiplier.

    Args:
        L: A nilpotent non-abelian algebra of maximal class with 3 <= m+n <= 5
        key: Catalog key of L, if any; its published placement is compared
        catalog: Catalog to match against (default: packaged catalog)

    Raises:
        PreconditionError: Each violated precondition by name
    """
    _check_classifiable(L)
    catalog = catalog or default_catalog()
    multiplier = schur_multiplier(L)
    s = s_invariant(L, multiplier)
    own = fingerprint(L, multiplier)

    members = catalog.s_bucket_members(s)
    matches = [k for k in members if fingerprint(catalog.build(k)) == own]
    result = Classification(L.name, s, members, matches)

    if s not in catalog.s_buckets:
        result.notes.append(f"s = {s} lies outside the published range of buckets")
    if key is not None:
        published = catalog.s_bucket_of(key)
        if published is not None and published != s:
            result.notes.append(f"NOTE: computed s = {s} diverges from the published placement s = {published}")
            log.warning("%s: computed s = %d, published s = %d", key, s, published)
    return result


@dataclass
class P1Verdict:
    """dim L^2 = dim M(L) = m+n-2 with m+n <= 5, computed and (optionally) claimed."""

    computed: bool
    derived_dim: int
    multiplier_dim: int
    claimed: bool | None = None
    claimed_multiplier_dim: int | None = None
    candidates: tuple[str, ...] = ()
    note: str | None = None


def proposition_p1_predicate(
    L: LieSuperalgebra,
    claimed_multiplier_dim: int | None = None,
    multiplier: MultiplierResult | None = None,
) -> P1Verdict:
    """
    Test dim L^2 = dim M(L) = m+n-2 and m+n <= 5.

    When true, the candidate set {L_{2,2}^{(9)}, 3A_{1,1}+2A, (D^{15}+A_{1,1})^3}
    is reported. A claimed multiplier dimension is evaluated alongside.
    """
    multiplier = multiplier if multiplier is not None else schur_multiplier(L)
    derived_dim = derived_subalgebra(L).dim
    target = L.dim - 2

    def holds(dim_m: int) -> bool:
        return derived_dim == dim_m == target and L.dim <= 5

    verdict = P1Verdict(
        computed=holds(multiplier.total) and is_nilpotent(L),
        derived_dim=derived_dim,
        multiplier_dim=multiplier.total,
    )
    if not is_nilpotent(L):
        verdict.note = "not nilpotent"
    if claimed_multiplier_dim is not None:
        verdict.claimed_multiplier_dim = claimed_multiplier_dim
        verdict.claimed = holds(claimed_multiplier_dim)
    if verdict.computed or verdict.claimed:
        verdict.candidates = P1_CANDIDATES
    return verdict


# === CAPABILITY ===

Conclusion = Literal["not capable", "no obstruction found", "inconclusive"]


@dataclass
class CandidateResult:
    """Induced-map evidence for one central line <x>."""

    vector: Vector
    label: str
    parity: str
    injective: bool  # injective => x in Z*(L)
    kernel_dim: int
    source_dim: int  # dim M(L)
    target_dim: int  # dim M(L/<x>)
    intersection_dim: int  # dim(<x> ∩ L^2)
    dimension_law_holds: bool

    @property
    def in_epicenter(self) -> bool:
        return self.injective


@dataclass
class CapabilityReport:
    """Per-candidate verdicts and the overall conclusion. Never says "capable"."""

    name: str
    candidates: list[CandidateResult]
    conclusion: Conclusion
    exhaustive: bool
    center_dims: tuple[int, int]
    exhaustiveness_note: str = EXHAUSTIVE_NOTE

    def summary(self) -> str:
        if self.conclusion == "no obstruction found":
            scope = "exhaustive" if self.exhaustive else "over tested candidates"
            return f"{self.conclusion} ({scope})"
        return self.conclusion


def check_candidate(L: LieSuperalgebra, x: Vector) -> None:
    """
    Raises:
        PreconditionError: If x is zero
        NotGradedError: If x is not homogeneous
        NotCentralError: If x is not central, naming the nonzero bracket
    """
    if len(x) != L.dim:
        raise PreconditionError(f"candidate has length {len(x)}, expected {L.dim}")
    if not any(x):
        raise PreconditionError("candidate is zero")
    if L.vector_parity(x) is None:
        raise NotGradedError(f"candidate {L.format_vector(x)} is not homogeneous")
    for j in range(L.dim):
        value = L.bracket(x, L.basis_vector(j))
        if any(value):
            raise NotCentralError(
                f"candidate not central: [{L.format_vector(x)},{L.names[j]}] = {L.format_vector(value)}"
            )


def capability_report(
    L: LieSuperalgebra,
    extra_candidates: Iterable[Vector] = (),
    include_center: bool = True,
) -> CapabilityReport:
    """
    Test central lines <x> for membership in the epicenter Z*(L).

    For each candidate the map M(L) -> M(L/<x>) is computed; an injective
    map puts x in Z*(L), so L is not capable. Otherwise the report says
    "no obstruction found" with an exhaustiveness flag.

    Args:
        L: The algebra
        extra_candidates: Additional central homogeneous vectors
        include_center: Test the RREF basis of each parity part of Z(L)

    Raises:
        NotCentralError, NotGradedError, PreconditionError: For a bad extra candidate
    """
    Z = center(L)
    extras = [tuple(x) for x in extra_candidates]
    for x in extras:
        check_candidate(L, x)
    vectors: list[Vector] = list(Z.rows) if include_center else []
    vectors.extend(x for x in extras if x not in vectors)

    results = []
    for x in vectors:
        induced = induced_multiplier_map(L, graded_span(L, [x]))
        results.append(
            CandidateResult(
                vector=x,
                label=L.format_vector(x),
                parity=L.vector_parity(x).label,
                injective=induced.injective,
                kernel_dim=induced.kernel_dim,
                source_dim=induced.source.total,
                target_dim=induced.target.total,
                intersection_dim=induced.intersection_dim,
                dimension_law_holds=induced.dimension_law_holds(),
            )
        )

    if any(r.injective for r in results):
        conclusion: Conclusion = "not capable"
    elif results or (include_center and Z.is_zero()):
        conclusion = "no obstruction found"
    else:
        conclusion = "inconclusive"
    exhaustive = include_center and all(d <= 1 for d in Z.dims)
    return CapabilityReport(
        name=L.name,
        candidates=results,
        conclusion=conclusion,
        exhaustive=exhaustive,
        center_dims=Z.dims,
    )

"""
The invariants t(L) and s(L) and the combined invariant report.

    t(L) = ½[(m+n)² + (n-m)] - dim M(L)
    s(L) = ½(m+n-2)(m+n-1) + n + 1 - dim M(L)

so that t(L) = m+n-2 + s(L). s(L) is only defined for non-abelian
nilpotent algebras.
"""

import logging
from dataclasses import dataclass, field

from ..homology import MultiplierResult, schur_multiplier
from ..superalg import (
    LieSuperalgebra,
    PreconditionError,
    derived_subalgebra,
    is_abelian,
    is_maximal_class,
    is_nilpotent,
)
from .bounds import (
    BoundCheck,
    check_derived_bound,
    check_general_bound,
    check_maximal_class_bounds,
    check_nonvanishing,
    general_bound,
)

log = logging.getLogger(__name__)


def s_base(m: int, n: int) -> int:
    """½(m+n-2)(m+n-1) + n + 1."""
    return (m + n - 2) * (m + n - 1) // 2 + n + 1


def s_from_dim(m: int, n: int, multiplier_dim: int) -> int:
    return s_base(m, n) - multiplier_dim


@dataclass
class InvariantReport:
    """t, s and every bound verdict for one algebra."""

    name: str
    dims: tuple[int, int]  # (m, n)
    derived_dims: tuple[int, int]  # (r, s) graded dims of L^2
    multiplier_dims: tuple[int, int]  # (a, b), M(L) = A(a|b)
    t: int
    s_inv: int | None  # None when s is not applicable
    nilpotent: bool
    abelian: bool
    maximal_class: bool
    bound_checks: list[BoundCheck] = field(default_factory=list)
    s_note: str | None = None

    @property
    def multiplier_dim(self) -> int:
        return sum(self.multiplier_dims)

    @property
    def failed_checks(self) -> list[BoundCheck]:
        """Applicable checks that do not hold (nonvanishing flags excluded)."""
        return [c for c in self.bound_checks if c.holds is False and c.theorem != "nonvanishing"]


def t_invariant(L: LieSuperalgebra, multiplier: MultiplierResult | None = None) -> int:
    """Deficiency of dim M(L) from ½[(m+n)² + (n-m)]; always >= 0."""
    multiplier = multiplier if multiplier is not None else schur_multiplier(L)
    return general_bound(*L.dims) - multiplier.total


def s_invariant(L: LieSuperalgebra, multiplier: MultiplierResult | None = None) -> int:
    """
    s(L) for a non-abelian nilpotent L.

    Raises:
        PreconditionError: "non-abelian required" or "not nilpotent"
    """
    if is_abelian(L):
        raise PreconditionError("non-abelian required")
    if not is_nilpotent(L):
        raise PreconditionError("not nilpotent")
    multiplier = multiplier if multiplier is not None else schur_multiplier(L)
    m, n = L.dims
    s = s_from_dim(m, n, multiplier.total)
    t = t_invariant(L, multiplier)
    assert t - s == m + n - 2, f"t - s = {t - s}, expected {m + n - 2}"
    return s


def _not_applicable(theorem: str, reason: str) -> BoundCheck:
    return BoundCheck(theorem=theorem, inequality=reason, lhs=None, rhs=None, holds=None, note=reason)


def compute_invariants(
    L: LieSuperalgebra, multiplier: MultiplierResult | None = None
) -> InvariantReport:
    """
    Compute t, s and run every bound check that applies to L.

    Checks whose hypotheses fail are recorded as not applicable with the
    reason, never dropped.

    Args:
        L: The algebra
        multiplier: Precomputed multiplier (computed when omitted)

    Returns:
        InvariantReport
    """
    multiplier = multiplier if multiplier is not None else schur_multiplier(L)
    nilpotent = is_nilpotent(L)
    abelian = is_abelian(L)
    report = InvariantReport(
        name=L.name,
        dims=L.dims,
        derived_dims=derived_subalgebra(L).dims,
        multiplier_dims=multiplier.dims,
        t=t_invariant(L, multiplier),
        s_inv=None,
        nilpotent=nilpotent,
        abelian=abelian,
        maximal_class=is_maximal_class(L),
    )
    if abelian:
        report.s_note = "not applicable (abelian)"
    elif not nilpotent:
        report.s_note = "not applicable (not nilpotent)"
    else:
        report.s_inv = s_invariant(L, multiplier)

    report.bound_checks.append(check_general_bound(L, multiplier))
    for theorem, check in (
        ("derived", check_derived_bound),
        ("nonvanishing", check_nonvanishing),
    ):
        try:
            report.bound_checks.append(check(L, multiplier))
        except PreconditionError as e:
            report.bound_checks.append(_not_applicable(theorem, str(e)))
    try:
        report.bound_checks.extend(check_maximal_class_bounds(L, multiplier))
    except PreconditionError as e:
        report.bound_checks.append(_not_applicable("maximal_class", str(e)))

    for check in report.failed_checks:
        log.warning("%s: %s", L.name, check)
    return report

"""
Bound theorems on dim M(L), evaluated on a concrete algebra.

Every check consumes COMPUTED multiplier dimensions. Each returns a
BoundCheck carrying both sides of the inequality; checks whose
hypotheses fail raise PreconditionError, except in compute_invariants
which records them as not applicable.
"""

import logging
from dataclasses import dataclass, field

from ..homology import MultiplierResult, schur_multiplier
from ..superalg import (
    LieSuperalgebra,
    PreconditionError,
    center,
    derived_subalgebra,
    is_abelian,
    is_maximal_class,
    is_nilpotent,
)

log = logging.getLogger(__name__)


@dataclass
class BoundCheck:
    """Outcome of one inequality check."""

    theorem: str  # "general", "derived", "maximal_t", "maximal_s", "intermediate", "nonvanishing"
    inequality: str
    lhs: int | None
    rhs: int | None
    holds: bool | None  # None when not applicable
    equality: bool | None = None
    note: str | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return self.holds is not None

    @property
    def verdict(self) -> str:
        if self.holds is None:
            return "n/a"
        return "holds" if self.holds else "FAILS"

    def __str__(self):
        text = f"[{self.theorem}] {self.inequality}: {self.verdict}"
        if self.note:
            text += f" ({self.note})"
        return text


def general_bound(m: int, n: int) -> int:
    """½[(m+n)² + (n-m)], the dimension of the exterior square."""
    return ((m + n) ** 2 + (n - m)) // 2


def derived_bound(m: int, n: int, r: int, s: int) -> int:
    """½(m+n+r+s-2)(m+n-r-s-1) + n + 1."""
    k = r + s
    return (m + n + k - 2) * (m + n - k - 1) // 2 + n + 1


def matches_heisenberg_sum(L: LieSuperalgebra) -> bool:
    """
    True iff L is H(1,0) + A(m-3|n).

    With L^2 = <z> even and central, the bracket is a form on L/Z(L) with
    values in <z>; it is H(1,0) + A exactly when Z(L) has codimension 2
    in the even part only.
    """
    m, n = L.dims
    if m < 3:
        return False
    derived = derived_subalgebra(L)
    if derived.dims != (1, 0) or not center(L).contains_subspace(derived):
        return False
    return center(L).dims == (m - 2, n)


def _multiplier(L: LieSuperalgebra, multiplier: MultiplierResult | None) -> MultiplierResult:
    return multiplier if multiplier is not None else schur_multiplier(L)


def check_general_bound(L: LieSuperalgebra, multiplier: MultiplierResult | None = None) -> BoundCheck:
    """
    dim M(L) <= ½[(m+n)² + (n-m)], with equality iff L is abelian.

    The check holds only if both the inequality and the biconditional hold.
    """
    dim_m = _multiplier(L, multiplier).total
    rhs = general_bound(*L.dims)
    equality = dim_m == rhs
    abelian = is_abelian(L)
    check = BoundCheck(
        theorem="general",
        inequality=f"dim M = {dim_m} <= {rhs}",
        lhs=dim_m,
        rhs=rhs,
        holds=dim_m <= rhs and equality == abelian,
        equality=equality,
        note="equality, abelian" if equality else "strict",
    )
    if equality != abelian:
        check.warnings.append(f"equality={equality} but abelian={abelian}")
    return check


def check_derived_bound(L: LieSuperalgebra, multiplier: MultiplierResult | None = None) -> BoundCheck:
    """
    dim M(L) <= ½(m+n+r+s-2)(m+n-r-s-1) + n + 1 for nilpotent L.

    When r+s = 1 the note reports whether equality holds and whether L has
    the shape H(1,0) + A(m-3|n).

    Raises:
        PreconditionError: "not nilpotent" or "derived subalgebra is zero"
    """
    if not is_nilpotent(L):
        raise PreconditionError("not nilpotent")
    r, s = derived_subalgebra(L).dims
    if r + s == 0:
        raise PreconditionError("derived subalgebra is zero")
    m, n = L.dims
    dim_m = _multiplier(L, multiplier).total
    rhs = derived_bound(m, n, r, s)
    equality = dim_m == rhs
    check = BoundCheck(
        theorem="derived",
        inequality=f"dim M = {dim_m} <= {rhs} (r+s = {r + s})",
        lhs=dim_m,
        rhs=rhs,
        holds=dim_m <= rhs,
        equality=equality,
    )
    if r + s == 1:
        heisenberg = matches_heisenberg_sum(L)
        check.note = (
            f"{'equality' if equality else 'strict'}; "
            f"{'is' if heisenberg else 'is not'} H(1,0)+A({m - 3}|{n})"
        )
        if equality != heisenberg:
            check.holds = False
            check.warnings.append(f"equality={equality} but Heisenberg shape={heisenberg}")
    return check


def check_maximal_class_bounds(
    L: LieSuperalgebra, multiplier: MultiplierResult | None = None
) -> list[BoundCheck]:
    """
    Double inequalities on t and s for nilpotent algebras of maximal class,
    plus the intermediate bound dim M(L) <= m+2n-2.

        (m+n)(m+n-3)+4 <= 2t < (m+n)² + n - m
        (m+n)(m+n-5)+8 <= 2s < (m+n)(m+n-1) - 2m + 4

    Raises:
        PreconditionError: "not nilpotent", "not maximal class", or a
            dimension requirement (m+n > 2, n >= 1)
    """
    m, n = L.dims
    if not is_nilpotent(L):
        raise PreconditionError("not nilpotent")
    if not is_maximal_class(L):
        raise PreconditionError("not maximal class")
    if m + n <= 2:
        raise PreconditionError("maximal class bounds need m+n > 2")
    if n < 1:
        raise PreconditionError("maximal class bounds need n >= 1")

    dim_m = _multiplier(L, multiplier).total
    total = m + n
    t = general_bound(m, n) - dim_m
    s = t - (total - 2)

    t_low, t_high = total * (total - 3) + 4, total**2 + n - m
    s_low, s_high = total * (total - 5) + 8, total * (total - 1) - 2 * m + 4
    return [
        BoundCheck(
            theorem="maximal_t",
            inequality=f"{t_low} <= 2t = {2 * t} < {t_high}",
            lhs=2 * t,
            rhs=t_high,
            holds=t_low <= 2 * t < t_high,
        ),
        BoundCheck(
            theorem="maximal_s",
            inequality=f"{s_low} <= 2s = {2 * s} < {s_high}",
            lhs=2 * s,
            rhs=s_high,
            holds=s_low <= 2 * s < s_high,
        ),
        BoundCheck(
            theorem="intermediate",
            inequality=f"dim M = {dim_m} <= m+2n-2 = {m + 2 * n - 2}",
            lhs=dim_m,
            rhs=m + 2 * n - 2,
            holds=dim_m <= m + 2 * n - 2,
        ),
    ]


def check_nonvanishing(L: LieSuperalgebra, multiplier: MultiplierResult | None = None) -> BoundCheck:
    """
    dim M(L) > 0 for nilpotent L of dimension > 1.

    A zero multiplier is flagged, not raised; the hypothesis on the class
    of L is not mechanized, so the flag is informative.
    """
    if not is_nilpotent(L):
        raise PreconditionError("not nilpotent")
    if L.dim <= 1:
        raise PreconditionError("nonvanishing needs dim L > 1")
    dim_m = _multiplier(L, multiplier).total
    check = BoundCheck(
        theorem="nonvanishing",
        inequality=f"dim M = {dim_m} > 0",
        lhs=dim_m,
        rhs=0,
        holds=dim_m > 0,
    )
    if dim_m == 0:
        check.note = "flagged: zero multiplier"
        log.warning("%s: nilpotent of dimension %d with zero multiplier", L.name, L.dim)
    return check

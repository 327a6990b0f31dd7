"""
Invariants derived from the multiplier and the bound theorems on it.

This module provides:
- t(L), s(L) and the combined InvariantReport
- The general, derived, maximal-class and nonvanishing bound checks
"""

from .bounds import (
    BoundCheck,
    check_derived_bound,
    check_general_bound,
    check_maximal_class_bounds,
    check_nonvanishing,
    derived_bound,
    general_bound,
    matches_heisenberg_sum,
)
from .models import (
    InvariantReport,
    compute_invariants,
    s_base,
    s_from_dim,
    s_invariant,
    t_invariant,
)

__all__ = [
    # Models
    "InvariantReport",
    "compute_invariants",
    "t_invariant",
    "s_invariant",
    "s_base",
    "s_from_dim",
    # Bounds
    "BoundCheck",
    "general_bound",
    "derived_bound",
    "matches_heisenberg_sum",
    "check_general_bound",
    "check_derived_bound",
    "check_maximal_class_bounds",
    "check_nonvanishing",
]

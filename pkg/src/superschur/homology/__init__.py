"""
Low-degree homology of Lie superalgebras.

- chains: wedge monomials, d2 (the commutator map x∧y -> [x,y]) and d3
- multiplier: M(L) by the chain engine and the cochain oracle, induced maps
"""

from .chains import (
    WedgeMonomial2,
    WedgeMonomial3,
    chain2_basis,
    chain3_basis,
    d2_matrix,
    d3_matrix,
    wedge,
)
from .multiplier import (
    InducedMap,
    MultiplierResult,
    ParityBlock,
    checked_multiplier,
    induced_multiplier_map,
    schur_multiplier,
    schur_multiplier_cochain_oracle,
)

__all__ = [
    "WedgeMonomial2",
    "WedgeMonomial3",
    "chain2_basis",
    "chain3_basis",
    "wedge",
    "d2_matrix",
    "d3_matrix",
    "MultiplierResult",
    "ParityBlock",
    "InducedMap",
    "schur_multiplier",
    "schur_multiplier_cochain_oracle",
    "checked_multiplier",
    "induced_multiplier_map",
]

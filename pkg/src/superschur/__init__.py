"""
superschur: exact Schur multipliers of finite-dimensional Lie superalgebras.

Computes M(L) = ker d2 / im d3 over the rationals, the invariants t(L)
and s(L), the bound theorems on them, and audits a catalog of published
maximal-class algebras against computed values.

Packages:
- superalg: structure constants, axioms, subspaces, quotients
- homology: chain complex, multiplier engines, induced maps
- invariants: t, s and the bound checks
"""

__version__ = "0.3.0"

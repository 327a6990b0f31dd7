"""
Tests for exact row reduction over QQ.
"""

import pytest
from sympy import QQ

from superschur.superalg import linalg


def q(*values):
    return tuple(QQ(v) for v in values)


class TestRowReduction:
    """Tests for rref, rank and nullspace."""

    def test_rref_drops_dependent_rows(self):
        rows, pivots = linalg.rref([q(1, 2), q(2, 4)], 2)
        assert rows == [q(1, 2)]
        assert pivots == (0,)

    def test_rref_normalizes(self):
        """Pivots are 1 and pivot columns are cleared."""
        rows, pivots = linalg.rref([q(2, 4, 0), q(0, 3, 3)], 3)
        assert rows == [q(1, 0, -2), q(0, 1, 1)]
        assert pivots == (0, 1)

    def test_empty_shapes(self):
        """Empty and zero-width inputs never reach sympy."""
        assert linalg.rref([], 3) == ([], ())
        assert linalg.rank([], 3) == 0
        assert linalg.rank([q(0, 0)], 2) == 0
        assert linalg.nullspace([q(1)], 0) == []

    def test_nullspace_in_rref(self):
        """Kernel of x + y is spanned by (1, -1)."""
        assert linalg.nullspace([q(1, 1)], 2) == [q(1, -1)]

    def test_nullspace_of_zero_map(self):
        assert linalg.nullspace([q(0, 0)], 2) == [q(1, 0), q(0, 1)]

    def test_rational_entries(self):
        """Arithmetic stays exact with fractions."""
        rows, _ = linalg.rref([(QQ(1, 3), QQ(1, 2))], 2)
        assert rows == [(QQ(1), QQ(3, 2))]


class TestMatrixOperations:
    """Tests for transpose, products and inverses."""

    def test_transpose(self):
        assert linalg.transpose([q(1, 2, 3), q(4, 5, 6)], 3) == [q(1, 4), q(2, 5), q(3, 6)]

    def test_matmul(self):
        a = [q(1, 2), q(0, 1)]
        b = [q(1, 0), q(3, 1)]
        assert linalg.matmul(a, b, 2, 2) == [q(7, 2), q(3, 1)]

    def test_matmul_zero_inner(self):
        assert linalg.matmul([()], [], 0, 2) == [q(0, 0)]

    def test_inverse(self):
        assert linalg.inverse([q(2, 0), q(0, 4)]) == [(QQ(1, 2), QQ(0)), (QQ(0), QQ(1, 4))]

    def test_singular_inverse(self):
        with pytest.raises(ValueError, match="singular"):
            linalg.inverse([q(1, 2), q(2, 4)])


class TestReduction:
    """Tests for reduction modulo an RREF basis."""

    def test_reduce_against(self):
        basis, pivots = linalg.rref([q(1, 0, 1)], 3)
        assert linalg.reduce_against(q(2, 1, 0), basis, pivots) == q(0, 1, -2)

    def test_in_span(self):
        basis, pivots = linalg.rref([q(1, 1, 0), q(0, 1, 1)], 3)
        assert linalg.in_span(q(1, 2, 1), basis, pivots)
        assert not linalg.in_span(q(0, 0, 1), basis, pivots)

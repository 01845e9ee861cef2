from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lgmirror import linalg

small = st.integers(-5, 5)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_times_matrix_is_identity(rows):
    m = linalg.to_matrix(rows)
    if linalg.det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m)
        return
    assert linalg.matmul(linalg.inverse(m), m) == linalg.identity(3)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=2, max_size=4))
def test_rank_matches_pivots(rows):
    m = linalg.to_matrix(rows)
    _, pivots = linalg.rref(m)
    assert linalg.rank(m) == len(pivots) <= min(len(rows), 4)


def test_solve_exact():
    m = linalg.to_matrix([[2, 1], [0, 3]])
    assert linalg.solve(m, [1, 1]) == [Fraction(1, 3), Fraction(1, 3)]
    assert linalg.det(m) == 6

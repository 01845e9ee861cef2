from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lgmirror.tower import Tower


def make():
    t = Tower()
    t.add("a", 2, F(1, 3))
    t.add("b", 3, F(2))
    return t


def test_reduction_uses_power_relations():
    t = make()
    assert t.scalar(1, {"a": 2}) == F(1, 3)
    assert t.scalar(1, {"b": 4}) == t.scalar(2, {"b": 1})
    assert t.scalar(1, {"a": -1}) == t.scalar(3, {"a": 1})


def test_inverse_of_single_terms():
    t = make()
    x = t.scalar(F(5, 7), {"a": 1, "b": 2})
    assert x * x.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        (x + 1).inverse()


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_exact_equality_implies_numeric_equality(i, j, k, l):
    t = make()
    x = t.scalar(1, {"a": i, "b": j}) * t.scalar(1, {"a": k, "b": l})
    y = t.scalar(1, {"a": i + k, "b": j + l})
    assert x == y
    assert x.numerically_equal(y)


def test_numeric_fallback_distinguishes():
    t = make()
    assert not t.scalar(1, {"a": 1}).numerically_equal(t.scalar(1, {"b": 1}))
    assert t.scalar(3, {"a": 1}).numerically_equal(t.scalar(1, {"a": -1}))


def test_json_forms():
    t = make()
    assert t.scalar(F(2, 3)).to_json() == "2/3"
    assert t.scalar(1, {"a": 1}).to_json() == {"terms": [["1", {"a": 1}]]}
    assert t.scalar(1, {"a": 1}).rational() is None


def test_conflicting_roots_rejected():
    t = make()
    with pytest.raises(AssertionError):
        t.add("a", 2, F(1, 2))

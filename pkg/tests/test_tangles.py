from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitkit.slopes import ProjectiveRational as R
from splitkit.slopes import TwistVector, cf_eval, distance
from splitkit.tangles import (
    TrivialTangle,
    enumerate_twisted_solutions,
    formula_slope,
    insert_central_twists,
    replacement,
    symmetric_expansion,
)


def test_symmetric_expansion_shape():
    assert list(symmetric_expansion(1, 1)) == [0, 1, 0, -1]
    assert list(symmetric_expansion(2, 3)) == [0, 0, 1, 2, 0, -2, -1, 0]
    assert cf_eval(symmetric_expansion(5, -3)).is_infinite


def test_symmetric_expansion_rejects():
    with pytest.raises(ValueError):
        symmetric_expansion(2, 4)
    with pytest.raises(ValueError):
        symmetric_expansion(0, 0)


def test_insert_worked_examples():
    v, r = insert_central_twists(TwistVector([0, 1, 0, -1]), 2)
    assert list(v) == [0, 1, 2, -1] and r == R(1, 2)
    v, r = insert_central_twists(TwistVector([0, 1, 0, -1]), -2)
    assert r == R(3, 2)


def test_insert_rejects():
    with pytest.raises(ValueError):
        insert_central_twists(TwistVector([0, 1, 0, -1]), 1)
    with pytest.raises(ValueError):
        insert_central_twists(TwistVector([0, 1, 1, -1]), 2)
    with pytest.raises(ValueError):
        insert_central_twists(TwistVector([0, 1, 0]), 2)


def test_replacement_distance():
    r = replacement(TrivialTangle(R.infinity()), R(1, 2))
    assert r.d == 2 and r.new.slope == R(1, 2)


def test_classifier_examples():
    sols = enumerate_twisted_solutions(R(3, 2), 2)
    assert [(s.a, s.b, s.central_twist) for s in sols] == [(1, 1, -2), (1, 2, -2)]
    assert enumerate_twisted_solutions(R(1, 3), 2) == []
    assert enumerate_twisted_solutions(R.infinity(), 2) == []
    with pytest.raises(ValueError):
        enumerate_twisted_solutions(R(1, 2), 1)


def test_classifier_to_dict_keys():
    (s, *_) = enumerate_twisted_solutions(R(1, 2), 2)
    assert set(s.to_dict()) >= {"a", "b", "signs", "d", "expansion", "slope"}


@given(st.integers(1, 30), st.integers(-30, 30), st.integers(2, 9), st.sampled_from([1, -1]))
def test_insertion_agrees_with_formula_and_classifier(a, b, d, sign):
    if gcd(a, b) != 1:
        return
    v, r = insert_central_twists(symmetric_expansion(a, b), sign * d)
    assert r.q == d * a * a
    assert distance(R.infinity(), r) == d * a * a
    assert r in {formula_slope(a, b, d, 1), formula_slope(a, b, d, -1)}
    sols = enumerate_twisted_solutions(r, d)
    assert any(s.a == a and abs(s.b) == abs(b) for s in sols)
    for s in sols:
        _, back = insert_central_twists(s.expansion, s.central_twist)
        assert back == r

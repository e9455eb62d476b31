import pytest

from splitkit.circles import (
    CrossingCircleSpec,
    circle_distance_check,
    circle_linking_profile,
    circles_for_crossing,
    circles_for_replacement,
    dedupe_by_invariants,
    normalize_profile,
    profile_darts,
    surgery_slope,
)
from splitkit.diagram import component_count, crossing_ref
from splitkit.moves import apply_move_darts, available_moves
from splitkit.slopes import ProjectiveRational as R


def test_surgery_slopes():
    assert surgery_slope(0, 1) == R(1, 2)
    assert surgery_slope(1, -1) == R(1, 2)
    assert surgery_slope(-3, -1) == R(-7, 2)
    with pytest.raises(ValueError):
        surgery_slope(0, 2)
    assert circle_distance_check(4, 1) == 2


def test_circles_for_replacement_pair():
    a, b = circles_for_replacement(R(1, 2))
    assert (a.framing, a.surgery_sign) == (0, 1) and (b.framing, b.surgery_sign) == (1, -1)
    assert a.slope == b.slope == R(1, 2)
    assert a.side == -b.side
    with pytest.raises(ValueError):
        circles_for_replacement(R(2, 3))
    with pytest.raises(ValueError):
        CrossingCircleSpec(0, 0, 0)


def test_hopf_circles(fx):
    h = fx["hopf"]
    profs = [circle_linking_profile(h, s) for s in circles_for_crossing(h, 0)]
    # at a clasp crossing each circle links both components once
    assert sorted(normalize_profile(p) for p in profs) == [(1, -1), (1, 1)]


def test_profile_is_zero_sum_on_self_crossings(fx):
    w = fx["whitehead-l5a1"]
    for c in range(len(w)):
        ref = crossing_ref(w, c)
        for s in circles_for_crossing(w, c):
            p = circle_linking_profile(w, s)
            assert sum(abs(v) for v in p) in (0, 2)
            if not ref.is_mixed:
                assert p[1 - ref.over_component] == 0


def test_dedupe(fx):
    w = fx["whitehead-l5a1"]
    specs = [s for c in range(len(w)) for s in circles_for_crossing(w, c)]
    classes = dedupe_by_invariants(specs, w)
    assert sum(len(c.members) for c in classes) == len(specs)
    assert len(classes) <= len(specs)
    with pytest.raises(ValueError):
        dedupe_by_invariants(specs)


def test_normalize_profile():
    assert normalize_profile((0, -2)) == (0, 2)
    assert normalize_profile((1, -1)) == (1, -1)
    assert normalize_profile((0, 0)) == (0, 0)


def test_profile_transported_by_far_moves(fx):
    """A move not touching crossing c leaves the profiles of its circles alone."""
    for name in ("whitehead-l5a1", "chain-3", "hopf"):
        d = fx[name]
        dd = d.darts
        k = component_count(d)
        for c in range(len(d)):
            for mv in available_moves(dd, len(d) + 2):
                touched = {x // 4 for x in mv.site if mv.kind in ("R1+", "R2+")}
                if mv.kind == "R3" or c in touched or mv.kind.endswith("-"):
                    continue
                nd, origin = apply_move_darts(dd, mv)
                j = origin.index(c)
                for side in (1, -1):
                    assert profile_darts(nd, j, side, k) == profile_darts(dd, c, side, k)

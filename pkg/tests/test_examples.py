"""Worked examples per operation, including small hand-derived values."""
import numpy as np
import pytest

from splitkit.circles import (
    circle_linking_profile,
    circles_for_crossing,
    circles_for_replacement,
    dedupe_by_invariants,
    surgery_slope,
)
from splitkit.diagram import (
    DiagramError,
    change_crossing,
    disjoint_union,
    is_disconnected,
    parse_pd,
    reverse_orientation,
    triangulation_bound,
)
from splitkit.homology import IntegerMatrix, goeritz_matrix, smith_normal_form
from splitkit.moves import Budget, reidemeister_neighborhood, simplify
from splitkit.search import enumerate_crossing_changes, lk_feasibility
from splitkit.slopes import ProjectiveRational as R
from splitkit.slopes import TwistVector, cf_eval
from splitkit.split import certify_split, is_unlink, obstruct_split
from splitkit.tangles import (
    TrivialTangle,
    enumerate_twisted_solutions,
    insert_central_twists,
    replacement,
    symmetric_expansion,
)

INF = R.infinity()


def test_replacement_distances():
    assert replacement(TrivialTangle(INF), INF).d == 0
    assert replacement(TrivialTangle(INF), R(1, 3)).d == 3


def test_classifier_core_arc_case():
    sols = enumerate_twisted_solutions(R(1, 2), 2)
    assert any(s.a == 1 and s.b == 0 for s in sols)


def test_symmetric_expansion_examples():
    assert list(symmetric_expansion(2, 1)) == [0, 2, 0, -2]
    assert list(symmetric_expansion(1, 0)) == [0, 0, 0, 0, 0, 0]
    for a, b in ((1, 1), (2, 1), (1, 0)):
        assert cf_eval(symmetric_expansion(a, b)).is_infinite


def test_insert_into_core_expansion():
    _, r = insert_central_twists(TwistVector([0] * 6), 3)
    assert r.q == 3


def test_single_twist_box():
    for c in range(-5, 6):
        assert cf_eval([c]) == R(c, 1)
    assert cf_eval([0]) == R(0, 1)


def test_label_used_three_times():
    with pytest.raises(DiagramError):
        parse_pd("X[1,1,2,2] X[1,3,3,4]")


def test_hopf_change_disconnects(fx):
    for c in (0, 1):
        s = simplify(change_crossing(fx["hopf"], c), Budget(4, 4))
        assert is_disconnected(s)


def test_neighborhood_zero_moves(fx):
    got = list(reidemeister_neighborhood(fx["trefoil"], Budget(8, 0)))
    assert len(got) == 1 and got[0].diagram == fx["trefoil"]


def test_r2_unlink_one_move(fx):
    hits = [nb for nb in reidemeister_neighborhood(fx["unlink-r2"], Budget(2, 1)) if is_disconnected(nb.diagram)]
    assert hits and len(hits[0].moves) == 1


def test_simplify_examples(fx):
    assert len(simplify(fx["unknot-kink"], Budget(2, 2))) == 0
    assert len(simplify(fx["hopf"], Budget(4, 4))) == 2
    assert simplify(fx["trefoil"], Budget(5, 3)) == fx["trefoil"]


def test_bound_small_values():
    assert [triangulation_bound(c) for c in (0, 1, 5)] == [0, 24, 120]


def test_obstruction_examples(fx):
    assert obstruct_split(np.array([[0, 1], [1, 0]])).not_split
    assert not obstruct_split(np.array([[0, 0], [0, 0]])).not_split


def test_certify_examples(fx):
    v = certify_split(fx["unlink-r2"])
    assert v.is_split and v.is_totally_split and v.is_unlink and len(v.witness) == 1
    assert is_unlink(fx["unknot-kink"]) is True
    assert is_unlink(fx["hopf"]) is False
    assert is_unlink(fx["trefoil"]) in (None, False)


def test_budget_monotonicity(fx):
    for name in ("unlink-r2", "hopf", "whitehead-l5a1"):
        d = fx[name]
        small = certify_split(d, Budget(6, 4, 500))
        big = certify_split(d, Budget(9, 12, 20000))
        if small.certified:
            assert big.kind == small.kind
    changed = change_crossing(fx["whitehead-l5a1"], 1)
    assert certify_split(changed, Budget(6, 4, 500)).kind == certify_split(changed, Budget(9, 20)).kind


def test_enumerate_on_knot(fx):
    assert enumerate_crossing_changes(fx["trefoil"], "distinct_components") == []


def test_lk_feasibility_examples():
    assert lk_feasibility(np.array([[0, 0], [0, 0]]), "s") is None
    assert lk_feasibility(np.array([[0, -1], [-1, 0]]), "s") is None


def test_surgery_examples():
    assert surgery_slope(-1, 1) == R(-1, 2)
    lo, hi = circles_for_replacement(R(-1, 2))
    assert (lo.framing, lo.surgery_sign, hi.framing, hi.surgery_sign) == (-1, 1, 0, -1)


def test_profiles_reverse_with_orientation(fx):
    for name in ("hopf", "whitehead-l5a1", "chain-3", "torus-2-6"):
        d = fx[name]
        r = reverse_orientation(d)
        for c in range(len(d)):
            # specs pin the circle by arc label, so it is the same circle in r
            for spec in circles_for_crossing(d, c):
                assert circle_linking_profile(r, spec) == tuple(-v for v in circle_linking_profile(d, spec))


def test_dedupe_duplicates_and_distinct(fx):
    w = fx["whitehead-l5a1"]
    spec = circles_for_crossing(w, 1)[1]
    assert len(dedupe_by_invariants([spec, spec, spec], w)) == 1
    a, b = circles_for_crossing(w, 1)
    assert len(dedupe_by_invariants([a, b], w)) == 2


def test_goeritz_examples(fx):
    assert goeritz_matrix(fx["unknot"]).rows == 0
    g = goeritz_matrix(fx["hopf"])
    assert g.rows == 1 and abs(g.entries[0][0]) == 2
    assert goeritz_matrix(fx["whitehead-l5a1"]).rows in (2, 3)


def test_smith_examples():
    assert str(smith_normal_form(IntegerMatrix.from_rows([[2]]))) == "Z/2"
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 1], [1, 2]])).torsion == (3,)
    g = smith_normal_form(IntegerMatrix.from_rows([[0]]))
    assert g.rank == 1 and g.torsion == ()


def test_split_union_reported(fx):
    d = disjoint_union(fx["hopf"], fx["hopf"])
    v = certify_split(d)
    assert v.kind == "split" and v.partition == ((0, 1), (2, 3))

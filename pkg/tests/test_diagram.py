import numpy as np
import pytest

from splitkit.diagram import (
    DiagramError,
    PDCode,
    bound_report,
    change_crossing,
    component_count,
    components,
    crossing_ref,
    disjoint_union,
    emit_pd,
    is_alternating,
    is_disconnected,
    linking_matrix,
    mirror,
    parse_pd,
    same_diagram,
    split_pieces,
    triangulation_bound,
    writhe,
)


def test_parse_emit_roundtrip(fx):
    for name, d in fx.items():
        again = parse_pd(emit_pd(d))
        assert again == d, name
        assert PDCode.from_dict(d.to_dict()) == d


def test_parse_json_and_comments():
    d = parse_pd('{"crossings": [[4,1,3,2],[2,3,1,4]]}')
    assert len(d) == 2 and component_count(d) == 2
    d2 = parse_pd("# a comment\nX[4,1,3,2]  X[2,3,1,4] # trailing")
    assert d2 == d


def test_empty_text_is_unknot():
    d = parse_pd("")
    assert len(d) == 0 and d.free_loops == 1 and component_count(d) == 1


@pytest.mark.parametrize(
    "bad",
    [
        "X[1,2,3]",
        "X[1,2,3,4]",  # each label must occur exactly twice
        "X[1,a,2,2]",
        "Y[1,1,2,2]",
        "X[4,1,3,2] X[2,3,1,4] S[+1]",
        "X[4,1,3,2] X[2,3,1,4] S[+2,-1]",
        '{"crossings": 5',
    ],
)
def test_malformed(bad):
    with pytest.raises(DiagramError):
        parse_pd(bad)


def test_components_and_counts(fx):
    assert component_count(fx["unknot"]) == 1
    assert component_count(fx["trefoil"]) == 1
    assert component_count(fx["hopf"]) == 2
    assert component_count(fx["whitehead-l5a1"]) == 2
    assert component_count(fx["chain-3"]) == 3
    assert sorted(len(c) for c in components(fx["hopf"])) == [2, 2]


def test_linking_numbers_against_known_links(fx):
    assert abs(linking_matrix(fx["hopf"])[0, 1]) == 1
    assert linking_matrix(fx["whitehead-l5a1"])[0, 1] == 0
    assert linking_matrix(fx["torus-2-6"])[0, 1] == 3
    m = linking_matrix(fx["chain-3"])
    assert sorted(abs(int(m[i, j])) for i in range(3) for j in range(i + 1, 3)) == [0, 1, 1]
    assert linking_matrix(fx["unlink-r2"])[0, 1] == 0
    for d in fx.values():
        m = linking_matrix(d)
        assert (m == m.T).all() and not np.diag(m).any()


def test_writhe_and_mirror(fx):
    t = fx["trefoil"]
    assert abs(writhe(t)) == 3
    assert writhe(mirror(t)) == -writhe(t)
    assert (linking_matrix(mirror(fx["torus-2-6"])) == -linking_matrix(fx["torus-2-6"])).all()


def test_change_crossing_basics(fx):
    h = fx["hopf"]
    c = change_crossing(h, 0)
    assert linking_matrix(c)[0, 1] == 0
    assert c.signs[0] == -h.signs[0]
    assert change_crossing(c, 0) == h
    ref = crossing_ref(h, 1)
    assert ref.is_mixed
    with pytest.raises(IndexError):
        change_crossing(h, 7)


def test_self_crossing_change_keeps_lk(fx):
    w = fx["whitehead-l5a1"]
    for i in range(len(w)):
        ref = crossing_ref(w, i)
        after = linking_matrix(change_crossing(w, i))[0, 1]
        assert after == 0 if not ref.is_mixed else abs(after) == 1


def test_alternating(fx):
    assert is_alternating(fx["whitehead-l5a1"])
    assert is_alternating(fx["trefoil"])
    assert not is_alternating(fx["unlink-r2"])


def test_disjoint_union_and_pieces(fx):
    u = disjoint_union(fx["hopf"], fx["trefoil"])
    assert is_disconnected(u)
    assert component_count(u) == 3
    parts = split_pieces(u)
    assert sorted(len(p) for p, _ in parts) == [2, 3]
    assert not is_disconnected(fx["hopf"])


def test_same_diagram_relabelled(fx):
    w = fx["whitehead-l5a1"]
    shifted = PDCode.from_tuples([[v + 10 for v in x] for x in reversed(w.crossings)])
    assert same_diagram(w, shifted)
    assert not same_diagram(w, fx["trefoil"])


def test_bound():
    assert triangulation_bound(5) == 120
    assert bound_report(5) == "k^120"
    with pytest.raises(ValueError):
        triangulation_bound(-1)

import pytest

from splitkit.diagram import DisconnectedDiagramError, disjoint_union, mirror
from splitkit.homology import (
    AbelianGroup,
    IntegerMatrix,
    branched_cover_h1,
    determinant,
    goeritz_matrix,
    h2_nonzero_rule,
    integer_det,
    smith_diagonal,
    smith_normal_form,
)

KNOWN = {"unknot": (1, ()), "unknot-kink": (1, ()), "hopf": (2, (2,)), "trefoil": (3, (3,)),
         "whitehead-l5a1": (8, (8,)), "torus-2-6": (6, (6,))}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_determinants(fx, name):
    det, tors = KNOWN[name]
    assert determinant(fx[name]) == det
    h = branched_cover_h1(fx[name])
    assert h.torsion == tors and h.rank == 0


def test_shading_and_drop_do_not_matter(fx):
    for name in ("hopf", "trefoil", "whitehead-l5a1", "chain-3"):
        d = fx[name]
        groups = set()
        for shade in (0, 1):
            g0 = goeritz_matrix(d, shade=shade)
            for drop in range(g0.rows + 1):
                groups.add(smith_normal_form(goeritz_matrix(d, shade=shade, drop=drop)))
        assert len(groups) == 1, name


def test_mirror_keeps_determinant(fx):
    for name in KNOWN:
        assert determinant(mirror(fx[name])) == determinant(fx[name])


def test_split_diagram_rejected(fx):
    with pytest.raises(DisconnectedDiagramError):
        goeritz_matrix(disjoint_union(fx["hopf"], fx["trefoil"]))
    with pytest.raises(DisconnectedDiagramError):
        goeritz_matrix(fx["unknot"].__class__((), (), 2))


def test_unlink_diagram_has_free_homology(fx):
    # a connected diagram of the 2-component unlink: det 0, H1 = Z
    h = branched_cover_h1(fx["unlink-r2"])
    assert determinant(fx["unlink-r2"]) == 0
    assert h.rank == 1 and h.torsion == ()


def test_smith_small_cases():
    assert smith_diagonal(IntegerMatrix.from_rows([[2, 4], [6, 8]])) == [2, 4]
    assert smith_diagonal(IntegerMatrix.from_rows([[0, 0], [0, 0]])) == [0, 0]
    g = smith_normal_form(IntegerMatrix.from_rows([[2, 0, 0], [0, 3, 0]]))
    assert g.torsion == (6,) and g.rank == 0
    g = smith_normal_form(IntegerMatrix.from_rows([[4]], 1))
    assert str(g) == "Z/4"
    assert smith_normal_form(IntegerMatrix(0, 0, ())).is_trivial


def test_integer_det():
    assert integer_det(IntegerMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert integer_det(IntegerMatrix.from_rows([[2, 3, 1], [4, 1, 5], [7, 2, 2]])) == 66
    with pytest.raises(ValueError):
        integer_det(IntegerMatrix.from_rows([[1, 2]]))


def test_group_validation_and_json():
    with pytest.raises(ValueError):
        AbelianGroup((4, 6))
    with pytest.raises(ValueError):
        AbelianGroup((1,))
    g = AbelianGroup((2, 4), 1)
    assert AbelianGroup.from_dict(g.to_dict()) == g
    assert g.order == 0 and not g.is_cyclic
    m = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    assert IntegerMatrix.from_dict(m.to_dict()) == m
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, ((1, 2),))


def test_h2_rule_cases():
    assert h2_nonzero_rule(5, 2).case == "boundary-count"
    r = h2_nonzero_rule(3, 1)
    assert r.holds and r.case == "seifert-surface" and "assumes" in r.explanation
    r = h2_nonzero_rule(2, 1, [[0, 0], [0, 0]], (0,))
    assert r.holds and r.case == "two-component-zero-lk"
    r = h2_nonzero_rule(2, 1, [[0, 2], [2, 0]], (1,))
    assert not r.holds
    with pytest.raises(ValueError):
        h2_nonzero_rule(2, 2, [[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        h2_nonzero_rule(2, 1)
    assert not h2_nonzero_rule(1, 1).holds

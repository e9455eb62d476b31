"""Randomised property suites; every suite runs at least 1000 cases."""
import itertools
import random
from math import gcd

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import perturbed
from splitkit.diagram import change_crossing, crossing_ref, disjoint_union, linking_matrix, parse_pd
from splitkit.fixtures import load_fixture
from splitkit.homology import IntegerMatrix, smith_diagonal, smith_normal_form
from splitkit.moves import Budget, random_moves
from splitkit.slopes import ProjectiveRational, cf_eval, cf_expand
from splitkit.split import certify_split, replay_witness

N = 1000
many = settings(max_examples=N, deadline=None)


# ---------------------------------------------------------------- slopes


@many
@given(st.integers(-100, 100), st.integers(-100, 100))
def test_slope_roundtrip(p, q):
    if p == 0 and q == 0:
        return
    r = ProjectiveRational(p, q)
    assert cf_eval(cf_expand(r)) == r
    assert ProjectiveRational.parse(str(r)) == r


# ---------------------------------------------------------------- diagrams


@many
@given(perturbed(), st.integers(0, 10**6))
def test_change_crossing_involution(sample, pick):
    _, _, e, _ = sample
    if not len(e):
        return
    i = pick % len(e)
    once = change_crossing(e, i)
    assert change_crossing(once, i) == e
    diff = linking_matrix(once) - linking_matrix(e)
    ref = crossing_ref(e, i)
    if ref.is_mixed:
        a, b = ref.over_component, ref.under_component
        assert abs(diff[a, b]) == 1 and abs(diff).sum() == 2
    else:
        assert not diff.any()


@many
@given(perturbed(max_moves=8, max_crossings=11))
def test_linking_matrix_invariance(sample):
    _, d, e, _ = sample
    assert (linking_matrix(e) == linking_matrix(d)).all()


# split links: perturbations of diagrams that are split in known ways
_SPLIT_SOURCES = (
    "X[3,1,4,2] X[4,1,3,2]",  # unlink with a clasp
    "X[6,1,7,2] X[7,5,8,10] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]",  # unlinked Whitehead
)


def _split_source(i):
    if i < len(_SPLIT_SOURCES):
        return parse_pd(_SPLIT_SOURCES[i])
    return disjoint_union(load_fixture("hopf"), load_fixture("unknot-kink"))


@many
@given(st.integers(0, 2), st.integers(0, 2**32 - 1), st.integers(0, 4))
def test_split_witness_replay(which, seed, count):
    d = _split_source(which)
    e, _ = random_moves(d, count, random.Random(seed), 9)
    v = certify_split(e, Budget(9, 10, 4000))
    assert v.certified and v.is_split
    assert replay_witness(v)
    # the verdict survives a JSON round trip and still replays
    from splitkit.split import SplitVerdict

    assert replay_witness(SplitVerdict.from_dict(v.to_dict()))


# ---------------------------------------------------------------- Smith normal form


def determinantal_factors(rows):
    """Invariant factors from gcds of k x k minors (independent oracle)."""
    m = sympy.Matrix(rows)
    r, c = m.shape
    out, prev = [], 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for ri in itertools.combinations(range(r), k):
            for ci in itertools.combinations(range(c), k):
                g = gcd(g, int(m.extract(list(ri), list(ci)).det()))
        if g == 0:
            out.extend([0] * (min(r, c) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def unimodular(n, rng):
    u = sympy.eye(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            u[i, :] = -u[i, :]
        else:
            u[i, :] = u[i, :] + rng.randint(-2, 2) * u[j, :]
    return u


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@many
@given(matrices, st.integers(0, 2**32 - 1))
def test_snf_unimodular_invariance(rows, seed):
    rng = random.Random(seed)
    m = IntegerMatrix.from_rows(rows)
    diag = smith_diagonal(m)
    assert diag == determinantal_factors(rows)
    u, v = unimodular(m.rows, rng), unimodular(m.cols, rng)
    moved = (u * sympy.Matrix(rows) * v).tolist()
    m2 = IntegerMatrix.from_rows([[int(x) for x in r] for r in moved])
    assert smith_diagonal(m2) == diag
    assert smith_normal_form(m2) == smith_normal_form(m)

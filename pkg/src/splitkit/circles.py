"""Crossing circles: framings, surgery slopes, linking profiles, census.

A crossing arc at crossing c has two crossing circles.  Each bounds a
small disc that contains the arc and is pierced once by each strand of
the crossing.  In the projection the disc is a segment through the
crossing point, so it separates the four rays into two adjacent pairs.
Circle ``C_n`` uses the side made of the reference over-ray q and its
counter-clockwise neighbour when n is even, and its clockwise neighbour
when n is odd.  The circle is oriented so that a strand leaving through
that side counts +1.

Profiles therefore depend on n only through its parity, which selects
which of the two circles is meant.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import Darts, PDCode, component_count, crossing_ref, is_alternating
from .moves import Budget
from .search import Witness, all_witnesses
from .slopes import ProjectiveRational, distance


@dataclass(frozen=True)
class CrossingCircleSpec:
    arc_site: int | None  # crossing index, None for a bare slope computation
    framing: int
    surgery_sign: int
    reference_arc: int | None = None  # arc label of the over-ray that fixes the circle's side

    def __post_init__(self):
        if self.surgery_sign not in (1, -1):
            raise ValueError("surgery sign must be +1 or -1")

    @property
    def slope(self) -> ProjectiveRational:
        return surgery_slope(self.framing, self.surgery_sign)

    @property
    def side(self) -> int:
        return 1 if self.framing % 2 == 0 else -1

    def to_dict(self):
        return {"arc_site": self.arc_site, "framing": self.framing, "surgery_sign": self.surgery_sign,
                "reference_arc": self.reference_arc, "slope": str(self.slope)}


@dataclass(frozen=True)
class CircleClass:
    representative: CrossingCircleSpec
    invariant_profile: tuple[int, ...]
    members: tuple[int, ...]  # indices into the list passed to dedupe_by_invariants

    def to_dict(self):
        return {"representative": self.representative.to_dict(),
                "invariant_profile": list(self.invariant_profile), "members": list(self.members)}


def surgery_slope(n: int, sign: int) -> ProjectiveRational:
    if sign not in (1, -1):
        raise ValueError("surgery sign must be +1 or -1")
    return ProjectiveRational(2 * n + sign, 2)


def circles_for_replacement(target: ProjectiveRational, arc_site: int | None = None,
                            reference_arc: int | None = None) -> tuple[CrossingCircleSpec, CrossingCircleSpec]:
    """The two framed circles whose +-1 surgery gives the half-integer ``target``."""
    if not target.is_half_integer:
        raise ValueError(f"{target} is not a half-integer; only crossing-change slopes have crossing circles")
    lo = (target.p - 1) // 2
    return (CrossingCircleSpec(arc_site, lo, 1, reference_arc),
            CrossingCircleSpec(arc_site, lo + 1, -1, reference_arc))


def circles_for_crossing(d: PDCode, index: int,
                         target: ProjectiveRational = ProjectiveRational(1, 2)) -> tuple[CrossingCircleSpec, ...]:
    """Both circles at a crossing, pinned to the arc label of its slot-1 over-ray."""
    crossing_ref(d, index)  # range check
    return circles_for_replacement(target, index, d.crossings[index][1])


def _profile(dd: Darts, c: int, q: int, side: int, k: int, names=None) -> tuple[int, ...]:
    out = [0] * k
    col = names if names is not None else [int(v) for v in dd.color]
    over = 4 * c + q
    under = 4 * c + (q + side) % 4
    for x in (over, under):
        out[col[x]] += 1 if dd.is_out(x) else -1
    return tuple(out)


def profile_darts(dd: Darts, c: int, side: int, k: int) -> tuple[int, ...]:
    """Profile at the darts level with the slot-1 over-ray as reference.

    Colours must already be component indices below ``k``; used to carry a
    site through moves that keep crossing c.
    """
    return _profile(dd, c, 1, side, k)


def circle_linking_profile(d: PDCode, spec: CrossingCircleSpec) -> tuple[int, ...]:
    """Linking numbers of the circle with every component of ``d``."""
    if spec.arc_site is None:
        raise ValueError("the circle has no crossing site")
    crossing_ref(d, spec.arc_site)
    c = spec.arc_site
    labels = d.crossings[c]
    q = 1
    if spec.reference_arc is not None and labels[1] != spec.reference_arc and labels[3] == spec.reference_arc:
        q = 3
    return _profile(d.darts, c, q, spec.side, component_count(d))


def normalize_profile(p) -> tuple[int, ...]:
    """Profiles of one circle with either orientation agree after this."""
    p = tuple(int(v) for v in p)
    for v in p:
        if v:
            return p if v > 0 else tuple(-w for w in p)
    return p


def dedupe_by_invariants(specs, d: PDCode | None = None, profiles=None) -> list[CircleClass]:
    """Group circles by normalised profile (a lower bound on the true class count).

    Pass either a diagram (profiles are computed in it) or precomputed
    ``profiles`` when the circles live in different diagrams of one link.
    """
    specs = list(specs)
    if profiles is None:
        if d is None:
            raise ValueError("need a diagram or precomputed profiles")
        profiles = [circle_linking_profile(d, s) for s in specs]
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, p in enumerate(profiles):
        groups.setdefault(normalize_profile(p), []).append(i)
    return [CircleClass(specs[m[0]], key, tuple(m)) for key, m in groups.items()]


def circle_distance_check(n: int, sign: int) -> int:
    return distance(ProjectiveRational.infinity(), surgery_slope(n, sign))


# --------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class ArcRecord:
    components: tuple[int, int]  # (over, under) in the fixture's numbering
    witness: Witness
    circles: tuple[CrossingCircleSpec, CrossingCircleSpec]
    profiles: tuple[tuple[int, ...], tuple[int, ...]]
    alternating: bool
    in_fixture: bool

    @property
    def key(self):
        return (tuple(sorted(self.components)), frozenset(normalize_profile(p) for p in self.profiles))

    def to_dict(self):
        return {"components": list(self.components), "in_fixture": self.in_fixture,
                "alternating": self.alternating, "witness": self.witness.to_dict(),
                "circles": [c.to_dict() for c in self.circles],
                "profiles": [list(p) for p in self.profiles]}


@dataclass(frozen=True)
class CensusReport:
    fixture: str
    candidates: int
    fixture_splitting_crossings: tuple[int, ...]
    arcs: tuple[ArcRecord, ...]
    classes: tuple[CircleClass, ...]
    diagrams_searched: int
    neighborhood: Budget

    @property
    def splitting_arcs(self) -> int:
        return len(self.arcs)

    @property
    def circle_count(self) -> int:
        return 2 * len(self.arcs)

    @property
    def circle_classes(self) -> int:
        return len(self.classes)

    def to_dict(self):
        return {
            "splitting_arcs": self.splitting_arcs,
            "circle_classes": self.circle_classes,
            "circles": self.circle_count,
            "candidates": self.candidates,
            "fixture": self.fixture,
            "fixture_splitting_crossings": list(self.fixture_splitting_crossings),
            "diagrams_searched": self.diagrams_searched,
            "neighborhood": self.neighborhood.to_dict(),
            "witnesses": [a.to_dict() for a in self.arcs],
            "classes": [c.to_dict() for c in self.classes],
        }


def _arc_record(w: Witness, k: int, in_fixture: bool) -> ArcRecord:
    from .diagram import parse_pd

    d = parse_pd(w.diagram)
    circles = circles_for_crossing(d, w.crossing.index)
    # profile indices follow the fixture numbering carried by the witness
    names = [w.crossing.over_component, w.crossing.under_component]
    ref = crossing_ref(d, w.crossing.index)
    local = {ref.over_component: names[0], ref.under_component: names[1]}
    profs = []
    for spec in circles:
        p = circle_linking_profile(d, spec)
        full = [0] * k
        for i, v in enumerate(p):
            if v:
                full[local[i]] += v
        profs.append(tuple(full))
    return ArcRecord((names[0], names[1]), w, circles, tuple(profs), is_alternating(d), in_fixture)


def splitting_census(d: PDCode, name: str = "", budget: Budget | None = None,
                     neighborhood: Budget | None = None, jobs: int = 1) -> CensusReport:
    """Splitting crossing changes of ``d`` and of alternating diagrams near it.

    Arcs are told apart by the components they join and by the profiles of
    their two circles; this is an invariant-level lower bound on the number
    of arcs up to isotopy.
    """
    budget = budget or Budget(max_crossings=8, max_moves=20)
    neighborhood = neighborhood or Budget(max_crossings=len(d) + 1, max_moves=6, max_states=5000)
    k = component_count(d)
    n0 = len(d)
    seen_diagrams = [0]

    def accept(nb):
        seen_diagrams[0] += 1
        return len(nb.diagram) == n0 and is_alternating(nb.diagram)

    own, _ = all_witnesses(d, "s", budget, Budget(n0, 0, 1))
    fixture_hits = tuple(sorted({w.crossing.index for w in own}))
    wits, _ = all_witnesses(d, "s", budget, neighborhood, jobs=jobs, accept=accept)
    arcs: dict = {}
    for w in list(own) + list(wits):
        rec = _arc_record(w, k, not w.moves)
        arcs.setdefault(rec.key, rec)
    records = tuple(arcs.values())
    specs = [c for r in records for c in r.circles]
    profiles = [p for r in records for p in r.profiles]
    classes = tuple(dedupe_by_invariants(specs, profiles=profiles))
    return CensusReport(name, len(d), fixture_hits, records, classes, seen_diagrams[0], neighborhood)


def whitehead_census(jobs: int = 1) -> CensusReport:
    from .fixtures import load_fixture

    return splitting_census(load_fixture("whitehead-l5a1"), "whitehead-l5a1", jobs=jobs)

"""Trivial tangles, tangle replacement and the distance >= 2 classifier.

A trivial tangle is determined by its slope, so ``TrivialTangle`` is a thin
wrapper.  The classifier answers: which slopes p/q can be reached from the
slope-infinity tangle by a replacement of distance d >= 2 along an arc that
is *not* the core arc?  Those are exactly

    p/q = (1 + s*d*a*b) / (s*d*a^2),   gcd(a, b) = 1,  s = +-1,

and each is realised by the palindromic expansion ``[0, c, 0, -rev(c)]`` of
a/b with the central 0 replaced by a twist of d crossings.  Replacements
along the core arc are never excluded; every result carries
``core_arc_possible = True``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .slopes import ProjectiveRational, TwistVector, cf_eval, cf_expand, distance

INFINITY = ProjectiveRational(1, 0)


@dataclass(frozen=True)
class TrivialTangle:
    slope: ProjectiveRational

    def __str__(self):
        return f"T({self.slope})"


@dataclass(frozen=True)
class Replacement:
    new: TrivialTangle
    d: int


@dataclass(frozen=True)
class ReplacementSolution:
    a: int
    b: int
    sign_num: int
    sign_den: int
    central_twist: int
    expansion: TwistVector
    slope: ProjectiveRational = field(default=INFINITY)

    @property
    def d(self) -> int:
        return abs(self.central_twist)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "signs": [self.sign_num, self.sign_den],
            "d": self.d,
            "central_twist": self.central_twist,
            "expansion": list(self.expansion),
            "slope": str(self.slope),
        }


def replacement(old: TrivialTangle, new_slope: ProjectiveRational) -> Replacement:
    return Replacement(TrivialTangle(new_slope), distance(old.slope, new_slope))


def symmetric_expansion(a: int, b: int) -> TwistVector:
    if a == 0 and b == 0:
        raise ValueError("(a, b) = (0, 0) is not a slope")
    if gcd(a, b) != 1:
        raise ValueError(f"a={a}, b={b} are not coprime")
    c = cf_expand(ProjectiveRational(a, b)).entries
    return TwistVector((0,) + c + (0,) + tuple(-x for x in reversed(c)))


def _central_index(sv: TwistVector) -> int:
    n2 = len(sv)
    if n2 < 4 or n2 % 2:
        raise ValueError(f"{sv} is not a palindromic replacement expansion")
    n = n2 // 2 - 1
    e = sv.entries
    if e[0] != 0 or e[n + 1] != 0:
        raise ValueError(f"{sv} is not a palindromic replacement expansion")
    if any(e[1 + i] != -e[n2 - 1 - i] for i in range(n)):
        raise ValueError(f"{sv} is not a palindromic replacement expansion")
    return n + 1


def insert_central_twists(sv: TwistVector, t: int) -> tuple[TwistVector, ProjectiveRational]:
    if abs(t) < 2:
        raise ValueError("central twist must have |t| >= 2")
    k = _central_index(sv)
    e = list(sv.entries)
    e[k] = t
    tv = TwistVector(e)
    return tv, cf_eval(tv)


def realised_sign(a: int, b: int, t: int) -> int:
    """Sign s in (1 + s*d*a*b)/(s*d*a^2) produced by central twist t.

    Calibrated against ``insert_central_twists``: the determinant of the
    twist-matrix product for [c1..cn] is (-1)^n, which flips the branch.
    """
    n = len(cf_expand(ProjectiveRational(a, b)))
    return (1 if t > 0 else -1) * (-1) ** n


def formula_slope(a: int, b: int, d: int, s: int) -> ProjectiveRational:
    return ProjectiveRational(s * (1 + s * d * a * b), d * a * a)


def enumerate_twisted_solutions(p_q: ProjectiveRational, d: int) -> list[ReplacementSolution]:
    """All (a, b, s) with a > 0 and p/q = (1 + s*d*a*b)/(s*d*a^2)."""
    if d < 2:
        raise ValueError("classifier requires distance d >= 2")
    p, q = p_q.p, p_q.q
    if q == 0 or q % d:
        return []
    a = isqrt(q // d)
    if a * a * d != q:
        return []
    out = []
    for s in (1, -1):
        num = s * p - 1  # = s*d*a*b
        if num % (d * a):
            continue
        b = s * num // (d * a)
        if gcd(a, b) != 1:
            continue
        t = d * s * realised_sign(a, b, 1)
        exp = symmetric_expansion(a, b)
        out.append(ReplacementSolution(a, b, s, s, t, exp, p_q))
    return out

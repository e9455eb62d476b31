"""Exact slope arithmetic for trivial 2-string tangles.

Slopes live in Q u {inf} and are stored as a reduced pair (p, q) with the sign
carried by p.  Twist vectors are continued-fraction expansions read left to
right::

    [c1, c2, ..., cn]  =  c1 + 1/(c2 + 1/(... + 1/cn))

with ``[] = inf``.  Evaluation goes through 2x2 integer matrices so that an
intermediate ``1/0`` never needs special casing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class ProjectiveRational:
    p: int
    q: int

    def __init__(self, p: int, q: int = 1):
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def infinity(cls) -> "ProjectiveRational":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_half_integer(self) -> bool:
        return self.q == 2

    @classmethod
    def parse(cls, text: str) -> "ProjectiveRational":
        s = text.strip().lower()
        if s.lstrip("+-") in ("inf", "infinity", "oo", "1/0"):
            return cls.infinity()
        m = re.fullmatch(r"([+-]?\d+)(?:\s*/\s*([+-]?\d+))?", s)
        if m is None:
            raise ValueError(f"malformed slope {text!r}")
        return cls(int(m.group(1)), int(m.group(2)) if m.group(2) else 1)

    def __str__(self) -> str:
        if self.q == 0:
            return "inf"
        return f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"ProjectiveRational({self.p}, {self.q})"

    def negate(self) -> "ProjectiveRational":
        return ProjectiveRational(-self.p, self.q)


@dataclass(frozen=True)
class TwistVector:
    entries: tuple[int, ...] = ()

    def __init__(self, entries: Iterable[int] = ()):
        object.__setattr__(self, "entries", tuple(int(c) for c in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def mirror(self) -> "TwistVector":
        """Mirror-image diagram: every twist box changes handedness."""
        return TwistVector(-c for c in self.entries)

    @classmethod
    def parse(cls, text: str) -> "TwistVector":
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"twist vector must be bracketed: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls()
        try:
            return cls(int(tok) for tok in body.split(","))
        except ValueError:
            raise ValueError(f"malformed twist vector {text!r}") from None

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.entries) + "]"


def distance(s1: ProjectiveRational, s2: ProjectiveRational) -> int:
    """Geometric intersection number of the lifted slopes on the torus."""
    return abs(s1.p * s2.q - s2.p * s1.q)


def twist_matrix(entries: Sequence[int]) -> tuple[int, int, int, int]:
    """Product M(c1) M(c2) ... M(cn) with M(c) = [[c, 1], [1, 0]].

    Returned as (a, b, c, d) for [[a, b], [c, d]]; its first column is the
    value of the continued fraction in homogeneous coordinates.
    """
    a, b, c, d = 1, 0, 0, 1
    for x in entries:
        # [[a,b],[c,d]] @ [[x,1],[1,0]]
        a, b, c, d = a * x + b, a, c * x + d, c
    return a, b, c, d


def cf_eval(tv: TwistVector | Sequence[int]) -> ProjectiveRational:
    a, _, c, _ = twist_matrix(tuple(tv))
    return ProjectiveRational(a, c)


def cf_expand(r: ProjectiveRational) -> TwistVector:
    if r.is_infinite:
        return TwistVector((0, 0))
    p, q = r.p, r.q
    out = []
    while True:
        a, rem = divmod(p, q)
        out.append(a)
        if rem == 0:
            return TwistVector(out)
        p, q = q, rem

"""Goeritz matrices, Smith normal form, and branched double cover homology.

All arithmetic is on Python integers.  The matrices met here are tiny
(one row per white region), so exactness matters far more than speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diagram import DisconnectedDiagramError, PDCode, faces, is_disconnected


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ents = tuple(tuple(int(v) for v in r) for r in self.entries)
        if len(ents) != self.rows or any(len(r) != self.cols for r in ents):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=object).reshape(self.rows, self.cols)

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.to_list()}

    @classmethod
    def from_dict(cls, obj: dict) -> "IntegerMatrix":
        return cls.from_rows(obj["entries"], obj.get("cols"))


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank plus cyclic factors Z/d_1 + ... + Z/d_k with d_1 | d_2 | ..."""

    torsion: tuple[int, ...] = ()
    rank: int = 0

    def __post_init__(self):
        t = tuple(int(v) for v in self.torsion)
        if any(v < 2 for v in t):
            raise ValueError("torsion coefficients must be at least 2")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        if self.rank < 0:
            raise ValueError("negative rank")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.rank == 0

    @property
    def is_cyclic(self) -> bool:
        return len(self.torsion) + self.rank <= 1

    @property
    def order(self) -> int:
        """Order of the group, 0 when it is infinite."""
        if self.rank:
            return 0
        out = 1
        for v in self.torsion:
            out *= v
        return out

    def __str__(self):
        parts = [f"Z/{v}" for v in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "rank": self.rank, "name": str(self)}

    @classmethod
    def from_dict(cls, obj: dict) -> "AbelianGroup":
        return cls(tuple(obj["torsion"]), obj["rank"])


# --------------------------------------------------------------------------
# Smith normal form


def smith_diagonal(m: IntegerMatrix) -> list[int]:
    """Invariant factors (non-negative, divisibility chain, zeros last)."""
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest non-zero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
                if bad is None:
                    break
                for j in range(t, cols):
                    a[t][j] += a[bad[0]][j]
                continue
            # move the smallest remainder in row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            _, i, j = min(cand)
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def smith_normal_form(m: IntegerMatrix) -> AbelianGroup:
    """Cokernel of ``m`` viewed as a map Z^cols -> Z^rows."""
    diag = smith_diagonal(m)
    torsion = tuple(v for v in diag if v > 1)
    rank = m.rows - sum(1 for v in diag if v != 0)
    return AbelianGroup(torsion, rank)


def integer_det(m: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --------------------------------------------------------------------------
# Goeritz matrix


def checkerboard(d: PDCode) -> tuple[list[list[int]], list[int]]:
    """Faces of a connected diagram and a proper 2-colouring of them."""
    dd = d.darts
    fs = faces(dd)
    face_of = {}
    for k, f in enumerate(fs):
        for x in f:
            face_of[x] = k
    colour = [-1] * len(fs)
    colour[0] = 0
    stack = [0]
    while stack:
        k = stack.pop()
        for x in fs[k]:
            # the corner just clockwise of x's corner is the adjacent region
            c, s = divmod(x, 4)
            other = face_of[4 * c + (s - 1) % 4]
            if colour[other] < 0:
                colour[other] = 1 - colour[k]
                stack.append(other)
            elif colour[other] == colour[k]:
                raise AssertionError("diagram faces are not 2-colourable")
    return fs, colour


def goeritz_matrix(d: PDCode, shade: int = 0, drop: int = 0) -> IntegerMatrix:
    """Goeritz matrix of a connected diagram with one white region deleted.

    ``shade`` picks which colour class counts as white and ``drop`` which
    white region (by index) is deleted; the cokernel does not depend on
    either choice.
    """
    if len(d) == 0:
        if d.free_loops > 1:
            raise DisconnectedDiagramError("goeritz_matrix needs a connected diagram")
        return IntegerMatrix(0, 0, ())
    if is_disconnected(d):
        raise DisconnectedDiagramError("goeritz_matrix needs a connected diagram; split it first")
    dd = d.darts
    fs, colour = checkerboard(d)
    face_of = {x: k for k, f in enumerate(fs) for x in f}
    white = [k for k in range(len(fs)) if colour[k] == shade]
    idx = {k: i for i, k in enumerate(white)}
    w = len(white)
    g = [[0] * w for _ in range(w)]
    for c in range(dd.n):
        corners = [face_of[4 * c + s] for s in range(4)]
        if colour[corners[0]] == shade:
            r1, r2, eta = corners[0], corners[2], -1
        else:
            r1, r2, eta = corners[1], corners[3], 1
        if r1 != r2:
            i, j = idx[r1], idx[r2]
            g[i][j] -= eta
            g[j][i] -= eta
    for i in range(w):
        g[i][i] = -sum(g[i][j] for j in range(w) if j != i)
    if not 0 <= drop < w:
        raise ValueError(f"drop index {drop} out of range for {w} white regions")
    keep = [i for i in range(w) if i != drop]
    return IntegerMatrix.from_rows([[g[i][j] for j in keep] for i in keep], len(keep))


def branched_cover_h1(d: PDCode) -> AbelianGroup:
    return smith_normal_form(goeritz_matrix(d))


def determinant(d: PDCode) -> int:
    return abs(integer_det(goeritz_matrix(d)))


# --------------------------------------------------------------------------
# the H_2 non-vanishing case analysis


@dataclass(frozen=True)
class H2Rule:
    holds: bool
    case: str
    explanation: str

    def to_dict(self):
        return {"holds": self.holds, "case": self.case, "explanation": self.explanation}


def h2_nonzero_rule(num_components: int, sublink_size: int, m=None, sublink_choice: Sequence[int] = ()) -> H2Rule:
    """Decide which case of the relative H_2 argument applies.

    ``sublink_choice`` lists the components of L' (those meeting the
    crossing disc); only its length matters unless the link has two
    components, where the linking number across the split is checked.
    """
    if num_components < 1:
        raise ValueError("a link has at least one component")
    if sublink_size not in (1, 2):
        raise ValueError("the crossing disc meets one or two components")
    if sublink_choice and len(sublink_choice) != sublink_size:
        raise ValueError("sublink_choice does not match sublink_size")
    if sublink_size > num_components:
        raise ValueError("sublink larger than the link")
    if num_components >= 4:
        return H2Rule(True, "boundary-count",
                      "at least four components leave at least two boundary tori in M, "
                      "so the relative second homology is non-zero")
    if num_components == 3:
        return H2Rule(True, "seifert-surface",
                      "a Seifert surface for a component outside L' gives a non-trivial class; "
                      "this assumes the standing hyperbolic and 2-string prime hypotheses, "
                      "which are not checked here")
    if num_components == 2:
        if sublink_size == 2:
            raise ValueError("with two components the crossing disc must meet a single component")
        if m is None:
            raise ValueError("the two-component case needs the linking matrix")
        mm = np.asarray(m)
        i = sublink_choice[0] if sublink_choice else 0
        lk = int(mm[i, 1 - i])
        if lk != 0:
            return H2Rule(False, "two-component-zero-lk",
                          f"linking number {lk} between L' and L - L' is non-zero")
        return H2Rule(True, "two-component-zero-lk",
                      "the linking number between L' and L - L' is zero, so a Seifert surface "
                      "for L - L' avoiding L' gives a non-trivial class")
    return H2Rule(False, "single-component", "a knot has no second component to carry a class")

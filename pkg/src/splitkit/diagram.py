"""Planar link diagrams as oriented PD codes.

Text grammar::

    X[a,b,c,d] X[...] ...  [S[+1,-1,...]]  [O*n]

Each ``X`` lists the four arc labels around a crossing counter-clockwise,
starting at the incoming under-strand.  The optional ``S`` block gives the
crossing signs (equivalently, the direction of each over-strand); without it
orientations are traced from the under-strands.  ``O*n`` adds n crossingless
loops, which a PD code cannot otherwise express; text with neither crossings
nor an ``O`` token is read as the crossingless unknot.

Internally every diagram is converted to the dart arrays described in
:mod:`splitkit.kernels`.  Components are ordered by their smallest arc label
and keep that order (their "colour") through every move in this package.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels


class DiagramError(ValueError):
    """Malformed or inconsistent PD input."""


class DisconnectedDiagramError(DiagramError):
    pass


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    signs: tuple[int, ...] = ()
    free_loops: int = 0
    _darts: "Darts | None" = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.signs) != len(self.crossings):
            raise DiagramError("one sign per crossing required")
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        if self._darts is None:
            object.__setattr__(self, "_darts", _darts_from_pd(self))

    @classmethod
    def from_tuples(cls, crossings: Iterable[Sequence[int]], signs=None, free_loops: int = 0) -> "PDCode":
        xs = []
        for pos, x in enumerate(crossings):
            x = tuple(x)
            if len(x) != 4:
                raise DiagramError(f"crossing {pos}: expected 4 arc labels, got {len(x)}")
            xs.append(tuple(int(v) for v in x))
        _check_labels(xs)
        if signs is None:
            signs = _infer_signs(xs)
        return cls(tuple(xs), tuple(signs), free_loops)

    @property
    def darts(self) -> "Darts":
        return self._darts

    @property
    def crossing_number(self) -> int:
        return len(self.crossings)

    def __len__(self):
        return len(self.crossings)

    def __str__(self):
        return emit_pd(self)

    def to_dict(self) -> dict:
        return {"crossings": [list(x) for x in self.crossings], "signs": list(self.signs), "free_loops": self.free_loops}

    @classmethod
    def from_dict(cls, obj: dict) -> "PDCode":
        return cls.from_tuples(obj.get("crossings", []), obj.get("signs"), obj.get("free_loops", 0))

    def arc_labels(self) -> list[int]:
        return sorted({v for x in self.crossings for v in x})


@dataclass(frozen=True)
class CrossingRef:
    index: int
    over_component: int
    under_component: int

    @property
    def is_mixed(self) -> bool:
        return self.over_component != self.under_component

    def to_dict(self):
        return {"index": self.index, "over_component": self.over_component, "under_component": self.under_component}


# --------------------------------------------------------------------------
# text / JSON

_TOKEN = re.compile(r"\s*(X|S)\s*\[([^\]]*)\]|\s*O\s*\*\s*(\d+)|\s*(\S+)")


def parse_pd(text: str) -> PDCode:
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    if text.startswith("{"):
        try:
            return PDCode.from_dict(json.loads(text))
        except (json.JSONDecodeError, TypeError, AttributeError) as e:
            raise DiagramError(f"bad JSON diagram: {e}") from None
    crossings, signs, loops = [], None, 0
    saw_loops = False
    pos = 0
    for m in _TOKEN.finditer(text):
        pos += 1
        kind, body, nloops, junk = m.groups()
        if junk is not None:
            if junk in (",", ";"):
                continue
            raise DiagramError(f"token {pos}: unexpected {junk!r}")
        if nloops is not None:
            saw_loops = True
            loops += int(nloops)
            continue
        try:
            vals = [int(v) for v in body.replace(" ", "").split(",") if v != ""]
        except ValueError:
            raise DiagramError(f"token {pos}: non-integer entry in {kind}[{body}]") from None
        if kind == "X":
            if len(vals) != 4:
                raise DiagramError(f"crossing {len(crossings)} (token {pos}): expected 4 labels, got {len(vals)}")
            crossings.append(vals)
        else:
            if any(v not in (1, -1) for v in vals):
                raise DiagramError(f"token {pos}: signs must be +1/-1")
            signs = vals
    if signs is not None and len(signs) != len(crossings):
        raise DiagramError(f"sign block has {len(signs)} entries for {len(crossings)} crossings")
    if not crossings and not saw_loops:
        loops = 1  # an empty code is the crossingless unknot
    return PDCode.from_tuples(crossings, signs, loops)


def emit_pd(d: PDCode) -> str:
    parts = ["X[{},{},{},{}]".format(*x) for x in d.crossings]
    if d.crossings:
        parts.append("S[" + ",".join("+1" if s > 0 else "-1" for s in d.signs) + "]")
    if d.free_loops:
        parts.append(f"O*{d.free_loops}")
    return " ".join(parts)


def _check_labels(xs):
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(xs):
        for s, v in enumerate(x):
            where.setdefault(v, []).append((i, s))
    for v, occ in where.items():
        if len(occ) == 1:
            raise DiagramError(f"dangling arc label {v} at crossing {occ[0][0]}")
        if len(occ) > 2:
            raise DiagramError(f"arc label {v} appears {len(occ)} times (crossings {[o[0] for o in occ]})")


def _infer_signs(xs) -> list[int]:
    """Orient over-strands by tracing from the under-strands.

    Components that are over at every crossing fall back to the usual
    consecutive-labelling convention.
    """
    n = len(xs)
    where: dict[int, list[int]] = {}
    for i, x in enumerate(xs):
        for s, v in enumerate(x):
            where.setdefault(v, []).append(4 * i + s)
    pair = [0] * (4 * n)
    for occ in where.values():
        a, b = occ
        pair[a], pair[b] = b, a
    out = [0] * (4 * n)  # +1 outgoing, -1 incoming, 0 unknown
    for c in range(n):
        out[4 * c] = -1
        out[4 * c + 2] = 1

    def through(x):
        return (x // 4) * 4 + (x % 4 + 2) % 4

    seen = [False] * (4 * n)
    for start in range(4 * n):
        if seen[start]:
            continue
        cyc = []
        cur = start
        while True:
            cyc.append(cur)
            t = through(cur)
            cyc.append(t)
            cur = pair[t]
            if cur == start:
                break
        for x in cyc:
            seen[x] = True
        # cyc alternates entering/leaving when traversed from `start`
        flip = 0
        for k, x in enumerate(cyc):
            if out[x]:
                want = -1 if k % 2 == 0 else 1
                flip = 1 if out[x] == want else -1
                break
        if flip == 0:
            c, s = divmod(cyc[0], 4)
            b, dd = xs[c][1], xs[c][3]
            over_d_to_b = b == dd + 1 or dd - b > 1
            # entering at slot s: s == 3 means d->b
            enter_slot = s
            flip = 1 if (enter_slot == 3) == over_d_to_b else -1
        for k, x in enumerate(cyc):
            sgn = -1 if k % 2 == 0 else 1
            val = sgn * flip
            if out[x] and out[x] != val:
                raise DiagramError(f"inconsistent orientation at crossing {x // 4}")
            out[x] = val
    signs = []
    for c in range(n):
        signs.append(1 if out[4 * c + 3] == -1 else -1)
    return signs


# --------------------------------------------------------------------------
# dart representation


class Darts:
    """Array view: pair[4n], over_in[n], color[4n], plus crossingless loops.

    ``loop_colors`` remembers which component each free loop came from, so
    a search can report partitions in the component numbering it started
    with.
    """

    __slots__ = ("pair", "over_in", "color", "loops", "loop_colors", "_key", "_lkey")

    def __init__(self, pair, over_in, color, loops=0, loop_colors=None):
        self.pair = np.asarray(pair, dtype=np.int64)
        self.over_in = np.asarray(over_in, dtype=np.int64)
        self.color = np.asarray(color, dtype=np.int64)
        self.loops = int(loops)
        if loop_colors is None:
            top = int(self.color.max()) + 1 if self.color.size else 0
            loop_colors = range(top, top + self.loops)
        self.loop_colors = tuple(int(v) for v in loop_colors)
        if len(self.loop_colors) != self.loops:
            raise DiagramError("loop colour list does not match loop count")
        self._key = None
        self._lkey = None

    def component_colors(self) -> list[int]:
        """Distinct colours present: crossing components then free loops."""
        return sorted({int(v) for v in self.color}) + list(self.loop_colors)

    @property
    def n(self) -> int:
        return int(self.over_in.shape[0])

    def is_out(self, x: int) -> bool:
        s = x % 4
        return s == 2 or s == (int(self.over_in[x // 4]) + 2) % 4

    def is_over(self, x: int) -> bool:
        return x % 2 == 1

    def key(self, use_colors: bool = True):
        if use_colors and self._key is not None:
            return self._key
        if not use_colors and self._lkey is not None:
            return self._lkey
        k = canonical_key(self, use_colors)
        if use_colors:
            self._key = k
        else:
            self._lkey = k
        return k

    def to_pd(self) -> PDCode:
        return _pd_from_darts(self)


def through(x: int) -> int:
    return (x & ~3) | ((x + 2) & 3)


def _darts_from_pd(d: PDCode) -> Darts:
    n = len(d.crossings)
    where: dict[int, list[int]] = {}
    for i, x in enumerate(d.crossings):
        for s, v in enumerate(x):
            where.setdefault(v, []).append(4 * i + s)
    pair = np.empty(4 * n, dtype=np.int64)
    for v, occ in where.items():
        if len(occ) != 2:
            raise DiagramError(f"arc label {v} appears {len(occ)} times")
        a, b = occ
        pair[a], pair[b] = b, a
    over_in = np.array([3 if s > 0 else 1 for s in d.signs], dtype=np.int64)
    dd = Darts(pair, over_in, np.zeros(4 * n, dtype=np.int64), d.free_loops, [0] * d.free_loops)
    for x in range(4 * n):
        if dd.is_out(x) == dd.is_out(int(pair[x])):
            raise DiagramError(f"orientation clash on arc {d.crossings[x // 4][x % 4]}")
    # colour = component rank by smallest arc label
    color = np.full(4 * n, -1, dtype=np.int64)
    cycles = strand_cycles(dd)
    mins = []
    for cyc in cycles:
        mins.append(min(d.crossings[x // 4][x % 4] for x in cyc))
    order = sorted(range(len(cycles)), key=lambda k: mins[k])
    for rank, k in enumerate(order):
        for x in cycles[k]:
            color[x] = rank
    dd.color = color
    k = len(cycles)
    dd.loop_colors = tuple(range(k, k + d.free_loops))
    return dd


def strand_cycles(dd: Darts) -> list[list[int]]:
    """Darts of each component, in orientation order starting at an outgoing dart."""
    n4 = 4 * dd.n
    seen = np.zeros(n4, dtype=bool)
    out = []
    pair = dd.pair
    for x0 in range(n4):
        if seen[x0] or not dd.is_out(x0):
            continue
        cyc = []
        x = x0
        while True:
            y = int(pair[x])
            cyc.append(x)
            cyc.append(y)
            seen[x] = seen[y] = True
            x = through(y)
            if x == x0:
                break
        out.append(cyc)
    return out


def _pd_from_darts(dd: Darts) -> PDCode:
    n = dd.n
    cycles = strand_cycles(dd)
    ranked = sorted(cycles, key=lambda cyc: (int(dd.color[cyc[0]]), min(cyc)))
    label = np.zeros(4 * n, dtype=np.int64)
    nl = 1
    for cyc in ranked:
        # start at the outgoing dart of smallest index for determinism
        outs = [cyc[k] for k in range(0, len(cyc), 2)]
        k0 = outs.index(min(outs))
        m = len(outs)
        for j in range(m):
            x = outs[(k0 + j) % m]
            label[x] = nl
            label[int(dd.pair[x])] = nl
            nl += 1
    crossings = tuple(tuple(int(label[4 * c + s]) for s in range(4)) for c in range(n))
    signs = tuple(1 if int(dd.over_in[c]) == 3 else -1 for c in range(n))
    # build directly; colours are carried over so component order is preserved
    pd = PDCode.__new__(PDCode)
    object.__setattr__(pd, "crossings", crossings)
    object.__setattr__(pd, "signs", signs)
    object.__setattr__(pd, "free_loops", dd.loops)
    rank_of = {}
    for cyc in ranked:
        c = int(dd.color[cyc[0]])
        rank_of.setdefault(c, len(rank_of))
    color = np.array([rank_of[int(c)] for c in dd.color], dtype=np.int64) if n else np.zeros(0, dtype=np.int64)
    nd = Darts(dd.pair.copy(), dd.over_in.copy(), color, dd.loops)
    object.__setattr__(pd, "_darts", nd)
    return pd


def canonical_key(dd: Darts, use_colors: bool = True):
    """Relabelling-invariant key: sorted canonical codes of the connected pieces."""
    n = dd.n
    if n == 0:
        return ((), dd.loops)
    labels = kernels.piece_labels(dd.pair, n)
    pieces = []
    for root in sorted(set(int(v) for v in labels)):
        cs = [c for c in range(n) if labels[c] == root]
        sub = _subdarts(dd, cs)
        code = kernels.canonical_code(sub.pair, sub.over_in, sub.color, use_colors)
        pieces.append(tuple(int(v) for v in code))
    pieces.sort()
    return (tuple(pieces), dd.loops)


def _subdarts(dd: Darts, cs: Sequence[int]) -> Darts:
    idx = {c: i for i, c in enumerate(cs)}
    m = len(cs)
    pair = np.empty(4 * m, dtype=np.int64)
    color = np.empty(4 * m, dtype=np.int64)
    for i, c in enumerate(cs):
        for s in range(4):
            y = int(dd.pair[4 * c + s])
            pair[4 * i + s] = 4 * idx[y // 4] + y % 4
            color[4 * i + s] = dd.color[4 * c + s]
    return Darts(pair, dd.over_in[list(cs)].copy(), color, 0)


def same_diagram(a: PDCode, b: PDCode, use_colors: bool = False) -> bool:
    return a.darts.key(use_colors) == b.darts.key(use_colors)


# --------------------------------------------------------------------------
# components and linking


def components(d: PDCode) -> list[tuple[int, ...]]:
    """Arc labels of each component in orientation order; free loops are ()."""
    dd = d.darts
    comps = []
    for cyc in strand_cycles(dd):
        arcs = tuple(d.crossings[x // 4][x % 4] for x in cyc[0::2])
        comps.append(arcs)
    comps.sort(key=min)
    comps.extend(() for _ in range(d.free_loops))
    return comps


def component_count(d: PDCode) -> int:
    return len(strand_cycles(d.darts)) + d.free_loops


def dart_components(d: PDCode) -> np.ndarray:
    """Component index (as ordered by :func:`components`) of every dart."""
    return d.darts.color.copy()


def crossing_ref(d: PDCode, index: int) -> CrossingRef:
    if not 0 <= index < len(d.crossings):
        raise IndexError(f"crossing index {index} out of range (0..{len(d.crossings) - 1})")
    col = d.darts.color
    return CrossingRef(index, int(col[4 * index + 1]), int(col[4 * index]))


def linking_matrix(d: PDCode) -> np.ndarray:
    k = component_count(d)
    m = np.zeros((k, k), dtype=np.int64)
    col = d.darts.color
    for c, s in enumerate(d.signs):
        a, b = int(col[4 * c]), int(col[4 * c + 1])
        if a != b:
            m[a, b] += s
            m[b, a] += s
    return m // 2


def writhe(d: PDCode) -> int:
    return sum(d.signs)


# --------------------------------------------------------------------------
# elementary operations


def change_crossing(d: PDCode, c: CrossingRef | int) -> PDCode:
    i = c.index if isinstance(c, CrossingRef) else int(c)
    if not 0 <= i < len(d.crossings):
        raise IndexError(f"crossing index {i} out of range (0..{len(d.crossings) - 1})")
    a, b, cc, dd = d.crossings[i]
    s = d.signs[i]
    new = (dd, a, b, cc) if s > 0 else (b, cc, dd, a)
    xs = list(d.crossings)
    xs[i] = new
    signs = list(d.signs)
    signs[i] = -s
    return PDCode(tuple(xs), tuple(signs), d.free_loops)


def mirror(d: PDCode) -> PDCode:
    out = d
    for i in range(len(d.crossings)):
        out = change_crossing(out, i)
    return out


def reverse_orientation(d: PDCode) -> PDCode:
    """Reverse every component (labels kept, tuples restart at the new incoming under)."""
    xs = [(c, dd, a, b) for (a, b, c, dd) in d.crossings]
    return PDCode(tuple(xs), d.signs, d.free_loops)


def relabel(d: PDCode, mapping: dict[int, int]) -> PDCode:
    xs = [tuple(mapping[v] for v in x) for x in d.crossings]
    return PDCode(tuple(xs), d.signs, d.free_loops)


def disjoint_union(a: PDCode, b: PDCode) -> PDCode:
    off = max(a.arc_labels(), default=0)
    xs = list(a.crossings) + [tuple(v + off for v in x) for x in b.crossings]
    return PDCode(tuple(xs), a.signs + b.signs, a.free_loops + b.free_loops)


def is_alternating(d: PDCode) -> bool:
    dd = d.darts
    for x in range(4 * dd.n):
        if dd.is_out(x):
            y = int(dd.pair[x])
            if (x % 2) == (y % 2):
                return False
    return True


# --------------------------------------------------------------------------
# faces and pieces


def faces(dd: Darts) -> list[list[int]]:
    """Face boundaries as lists of darts; face k lies left of each x -> pair[x]."""
    n4 = 4 * dd.n
    seen = np.zeros(n4, dtype=bool)
    out = []
    for x0 in range(n4):
        if seen[x0]:
            continue
        f = []
        x = x0
        while not seen[x]:
            seen[x] = True
            f.append(x)
            y = int(dd.pair[x])
            x = (y & ~3) | ((y - 1) & 3)
        out.append(f)
    return out


def pieces(d: PDCode) -> list[list[int]]:
    """Crossing sets of the connected pieces of the crossing-incidence graph."""
    n = len(d.crossings)
    if n == 0:
        return []
    labels = kernels.piece_labels(d.darts.pair, n)
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(int(labels[c]), []).append(c)
    return [groups[k] for k in sorted(groups)]


def is_disconnected(d: PDCode) -> bool:
    np_ = len(pieces(d))
    return np_ + d.free_loops >= 2


def split_pieces(d: PDCode) -> list[tuple[PDCode, list[int]]]:
    """Sub-diagram of every piece with the component indices it carries."""
    dd = d.darts
    out = []
    for cs in pieces(d):
        sub = _subdarts(dd, cs)
        comps = sorted({int(v) for v in sub.color})
        pd = sub.to_pd()
        out.append((pd, comps))
    k = len(strand_cycles(dd))
    for j in range(d.free_loops):
        out.append((PDCode((), (), 1), [k + j]))
    return out


# --------------------------------------------------------------------------
# triangulation accounting


def triangulation_bound(c: int) -> int:
    """Tetrahedra used by the octahedron-per-crossing triangulation of S^3."""
    if c < 0:
        raise ValueError("crossing number must be non-negative")
    return 24 * c


def bound_report(c: int, k_symbol: str = "k") -> str:
    return f"{k_symbol}^{triangulation_bound(c)}"

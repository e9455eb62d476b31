"""Reidemeister moves, budgeted neighbourhood search and simplification.

Move sites are expressed in darts of the diagram the move is applied to
(dart ``4*c + s`` = tuple position s of crossing c), so a list of moves
replays deterministically from the starting PD code.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Iterator

from .builder import Builder
from .diagram import Darts, PDCode, faces

KINDS = ("R1-", "R2-", "R3", "R1+", "R2+")


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple[int, ...]

    def to_dict(self):
        return {"move": self.kind, "site": list(self.site)}

    @classmethod
    def from_dict(cls, obj):
        return cls(obj["move"], tuple(int(v) for v in obj["site"]))

    def __str__(self):
        return f"{self.kind}{list(self.site)}"


@dataclass(frozen=True)
class Budget:
    max_crossings: int = 8
    max_moves: int = 20
    max_states: int = 20000

    def __post_init__(self):
        if self.max_crossings < 0 or self.max_moves < 0 or self.max_states <= 0:
            raise ValueError("budgets must be positive")

    def to_dict(self):
        return {"max_crossings": self.max_crossings, "max_moves": self.max_moves, "max_states": self.max_states}


@dataclass(frozen=True)
class Neighbor:
    diagram: PDCode
    moves: tuple[Move, ...]
    # raw darts keep the starting diagram's component colours
    darts: Darts | None = field(default=None, compare=False, repr=False)


# --------------------------------------------------------------------------
# enumeration


def _rot(x: int, k: int) -> int:
    return (x & ~3) | ((x + k) & 3)


def _r3_ok(dd: Darts, f) -> bool:
    x0, x1, x2 = f
    if len({x0 // 4, x1 // 4, x2 // 4}) != 3:
        return False
    a_b = x0 % 2 == 1
    a_c = int(dd.pair[x0]) % 2 == 1
    c_b = int(dd.pair[x1]) % 2 == 1
    return not (a_b != a_c and a_c == c_b)


def reducing_moves(dd: Darts) -> list[Move]:
    out = []
    done = set()
    for x in range(4 * dd.n):
        c = x // 4
        if int(dd.pair[x]) == _rot(x, 1) and c not in done:
            done.add(c)
            out.append(Move("R1-", (x,)))
    fs = faces(dd)
    seen = set()
    for f in fs:
        if len(f) != 2:
            continue
        x0, x1 = f
        c1, c2 = x0 // 4, x1 // 4
        if c1 == c2 or (x0 % 2) != (int(dd.pair[x0]) % 2):
            continue
        k = frozenset((c1, c2))
        if k in seen:
            continue
        seen.add(k)
        out.append(Move("R2-", (min(f),)))
    return out


def r3_moves(dd: Darts) -> list[Move]:
    out = []
    for f in faces(dd):
        if len(f) == 3 and _r3_ok(dd, f):
            out.append(Move("R3", (min(f),)))
    return out


def growing_moves(dd: Darts, max_crossings: int) -> list[Move]:
    out = []
    n = dd.n
    if n == 0:
        return out
    if n + 1 <= max_crossings:
        for x in range(4 * n):
            for par in (0, 1):
                out.append(Move("R1+", (x, par)))
    if n + 2 <= max_crossings:
        for f in faces(dd):
            m = len(f)
            for i in range(m):
                for j in range(i + 1, m):
                    xi, xj = f[i], f[j]
                    if xj == int(dd.pair[xi]):
                        continue
                    for over in (0, 1):
                        out.append(Move("R2+", (xi, xj, over)))
    return out


def available_moves(dd: Darts, max_crossings: int) -> list[Move]:
    return reducing_moves(dd) + r3_moves(dd) + growing_moves(dd, max_crossings)


# --------------------------------------------------------------------------
# application


def _face_of(dd: Darts, x0: int) -> list[int]:
    f = [x0]
    x = x0
    while True:
        y = int(dd.pair[x])
        x = _rot(y, -1)
        if x == x0:
            return f
        f.append(x)


def apply_move_darts(dd: Darts, mv: Move) -> tuple[Darts, list[int]]:
    b = Builder.from_darts(dd)
    k = mv.kind
    if k == "R1-":
        (x,) = mv.site
        if int(dd.pair[x]) != _rot(x, 1):
            raise ValueError(f"no kink at dart {x}")
        b.splice_out([x // 4])
    elif k == "R2-":
        f = _face_of(dd, mv.site[0])
        if len(f) != 2 or f[0] // 4 == f[1] // 4 or f[0] % 2 != int(dd.pair[f[0]]) % 2:
            raise ValueError(f"no reducible bigon at dart {mv.site[0]}")
        b.splice_out([f[0] // 4, f[1] // 4])
    elif k == "R3":
        f = _face_of(dd, mv.site[0])
        if len(f) != 3 or not _r3_ok(dd, f):
            raise ValueError(f"no R3 triangle at dart {mv.site[0]}")
        _r3(dd, b, f)
    elif k == "R1+":
        x, par = mv.site
        p = int(dd.pair[x])
        kc = b.add_crossing(par)
        hx, hp, col = b.hint[x], b.hint[p], b.color[x]
        for off, h in ((0, -hx), (1, -hp), (2, hx), (3, hp)):
            b.mark(kc + off, h, col)
        b.link(x, kc)
        b.link(kc + 1, p)
        b.link(kc + 2, kc + 3)
    elif k == "R2+":
        xi, xj, over = mv.site
        pi, pj = int(dd.pair[xi]), int(dd.pair[xj])
        if xj in (xi, pi):
            raise ValueError("R2+ needs two distinct edges")
        u = 1 if over else 0
        A = b.add_crossing(u)
        B = b.add_crossing(u)
        h1, h2 = b.hint[xi], b.hint[xj]
        c1, c2 = b.color[xi], b.color[xj]
        for x, h, col in ((A, -h1, c1), (A + 2, h1, c1), (B + 2, -h1, c1), (B, h1, c1),
                          (B + 1, -h2, c2), (B + 3, h2, c2), (A + 1, -h2, c2), (A + 3, h2, c2)):
            b.mark(x, h, col)
        b.link(xi, A)
        b.link(A + 2, B + 2)
        b.link(B, pi)
        b.link(xj, B + 1)
        b.link(B + 3, A + 1)
        b.link(A + 3, pj)
    else:
        raise ValueError(f"unknown move {k!r}")
    return b.finalize()


def _r3(dd: Darts, b: Builder, f) -> None:
    x0, x1, x2 = f
    c0, c1, c2 = x0 // 4, x1 // 4, x2 // 4
    P = [_rot(x0, 2), _rot(x0, 3), _rot(x1, 2), _rot(x1, 3), _rot(x2, 2), _rot(x2, 3)]
    a_over_b = x0 % 2 == 1
    a_over_c = int(dd.pair[x0]) % 2 == 1
    c_over_b = int(dd.pair[x1]) % 2 == 1
    XAB = b.add_crossing(0 if not a_over_b else 1)
    XBC = b.add_crossing(0 if c_over_b else 1)
    XAC = b.add_crossing(0 if not a_over_c else 1)
    ray = {  # new dart pointing toward boundary point P[k]
        0: XAC + 0, 3: XAB + 2,
        1: XBC + 0, 4: XAB + 3,
        2: XBC + 1, 5: XAC + 3,
    }
    toward = {XAC + 0: 0, XAC + 2: 3, XAB + 0: 0, XAB + 2: 3,
              XBC + 0: 1, XBC + 2: 4, XAB + 1: 1, XAB + 3: 4,
              XBC + 1: 2, XBC + 3: 5, XAC + 1: 2, XAC + 3: 5}
    for x, k in toward.items():
        b.mark(x, b.hint[P[k]], b.color[P[k]])
    b.link(XAC + 2, XAB + 0)
    b.link(XBC + 2, XAB + 1)
    b.link(XBC + 3, XAC + 1)
    pos = {d: k for k, d in enumerate(P)}
    done = set()
    for k, d in enumerate(P):
        if k in done:
            continue
        e = int(dd.pair[d])
        if e in pos:
            j = pos[e]
            b.link(ray[k], ray[j])
            done.update((k, j))
        else:
            b.link(ray[k], e)
            done.add(k)
    b.dead |= {c0, c1, c2}


def apply_move(d: PDCode, mv: Move) -> PDCode:
    dd, _ = apply_move_darts(d.darts, mv)
    return dd.to_pd()


def apply_moves(d: PDCode, moves) -> PDCode:
    for mv in moves:
        d = apply_move(d, mv)
    return d


# --------------------------------------------------------------------------
# search


def reidemeister_neighborhood(d: PDCode, budget: Budget, use_colors: bool = True,
                              grow: bool = True) -> Iterator[Neighbor]:
    """Diagrams reachable within the budget, fewest crossings explored first.

    ``d`` is always emitted first.  Duplicates (same canonical code) are
    dropped; with ``use_colors`` component identities are part of the code.
    """
    root = d.darts
    k0 = root.key(use_colors)
    parent: dict = {k0: None}
    yield Neighbor(d, (), root)
    heap = [(root.n, 0, 0, k0, root)]
    counter = 1
    states = 1
    while heap:
        _, depth, _, key, dd = heapq.heappop(heap)
        if depth >= budget.max_moves:
            continue
        moves = reducing_moves(dd) + r3_moves(dd)
        if grow:
            moves += growing_moves(dd, budget.max_crossings)
        for mv in moves:
            nd, _ = apply_move_darts(dd, mv)
            nk = nd.key(use_colors)
            if nk in parent:
                continue
            parent[nk] = (key, mv)
            states += 1
            path = []
            kk = nk
            while parent[kk] is not None:
                pk, m = parent[kk]
                path.append(m)
                kk = pk
            path.reverse()
            yield Neighbor(nd.to_pd(), tuple(path), nd)
            if states >= budget.max_states:
                return
            heapq.heappush(heap, (nd.n, depth + 1, counter, nk, nd))
            counter += 1


def simplify(d: PDCode, budget: Budget) -> PDCode:
    best = d
    for nb in reidemeister_neighborhood(d, budget):
        if len(nb.diagram) < len(best):
            best = nb.diagram
            if len(best) == 0:
                break
    return best


def greedy_simplify(d: PDCode) -> tuple[PDCode, tuple[Move, ...]]:
    """Apply reducing moves until none is left (no search)."""
    path = []
    dd = d.darts
    while True:
        mvs = reducing_moves(dd)
        if not mvs:
            return dd.to_pd(), tuple(path)
        dd, _ = apply_move_darts(dd, mvs[0])
        path.append(mvs[0])


def random_moves(d: PDCode, count: int, rng: random.Random, max_crossings: int = 10) -> tuple[PDCode, list[Move]]:
    path = []
    dd = d.darts
    for _ in range(count):
        mvs = available_moves(dd, max_crossings)
        if not mvs:
            break
        # weight kinds evenly so the many R2+ sites do not dominate
        by_kind: dict[str, list[Move]] = {}
        for m in mvs:
            by_kind.setdefault(m.kind, []).append(m)
        kind = rng.choice(sorted(by_kind))
        mv = rng.choice(by_kind[kind])
        dd, _ = apply_move_darts(dd, mv)
        path.append(mv)
    return dd.to_pd(), path

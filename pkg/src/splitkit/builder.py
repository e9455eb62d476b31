"""Assembly of diagrams from unoriented local pieces.

Moves and tangle surgery describe new crossings geometrically: four darts
in counter-clockwise order plus which opposite pair is the under-strand.
:meth:`Builder.finalize` then orients every strand (keeping any orientation
already known from the source diagram), rotates each crossing so slot 0 is
the incoming under-strand, and drops deleted crossings.
"""
from __future__ import annotations

import numpy as np

from .diagram import Darts, through


class Builder:
    def __init__(self):
        self.pair: list[int] = []
        self.under: list[int] = []  # 0: slots 0/2 under, 1: slots 1/3 under
        self.hint: list[int] = []  # +1 outgoing, -1 incoming, 0 unknown
        self.color: list[int] = []
        self.origin: list[int] = []
        self.dead: set[int] = set()
        self.loops = 0
        self.loop_colors: list[int] = []

    @classmethod
    def from_darts(cls, dd: Darts) -> "Builder":
        b = cls()
        n = dd.n
        b.pair = [int(v) for v in dd.pair]
        b.under = [0] * n
        b.hint = [1 if dd.is_out(x) else -1 for x in range(4 * n)]
        b.color = [int(v) for v in dd.color]
        b.origin = list(range(n))
        b.loops = dd.loops
        b.loop_colors = list(dd.loop_colors)
        return b

    @property
    def n(self) -> int:
        return len(self.under)

    def add_crossing(self, under: int, origin: int = -1) -> int:
        base = 4 * len(self.under)
        self.under.append(under)
        self.origin.append(origin)
        self.pair.extend([-1] * 4)
        self.hint.extend([0] * 4)
        self.color.extend([-1] * 4)
        return base

    def mark(self, x: int, hint: int, color: int) -> None:
        self.hint[x] = hint
        self.color[x] = color

    def link(self, x: int, y: int) -> None:
        self.pair[x] = y
        self.pair[y] = x

    def splice_out(self, removed) -> None:
        """Delete crossings, reconnecting every strand straight through them."""
        rem = set(removed)
        visited = set()
        for c in sorted(rem):
            for s in range(4):
                x = 4 * c + s
                if x in visited or self.pair[x] // 4 in rem:
                    continue
                visited.add(x)
                cur = x
                while True:
                    t = through(cur)
                    visited.add(t)
                    nxt = self.pair[t]
                    if nxt // 4 not in rem:
                        break
                    visited.add(nxt)
                    cur = nxt
                a, b = self.pair[x], nxt
                self.pair[a] = b
                self.pair[b] = a
        for c in sorted(rem):
            for s in range(4):
                x = 4 * c + s
                if x in visited:
                    continue
                cur = x
                self.loop_colors.append(self.color[x])
                while cur not in visited:
                    visited.add(cur)
                    t = through(cur)
                    visited.add(t)
                    cur = self.pair[t]
                self.loops += 1
        self.dead |= rem

    def _loop_colors(self, col) -> list[int]:
        used = {c for c in col if c >= 0}
        out = []
        nxt = max(used | set(self.loop_colors), default=-1) + 1
        for c in self.loop_colors:
            if c < 0:
                c = nxt
                nxt += 1
            out.append(c)
        return out

    def finalize(self) -> tuple[Darts, list[int]]:
        """Oriented, normalised darts plus origin index of each surviving crossing."""
        alive = [c for c in range(self.n) if c not in self.dead]
        n4 = 4 * self.n
        orient = [0] * n4
        col = list(self.color)
        seen = [False] * n4
        next_color = max([v for v in col if v >= 0], default=-1) + 1
        for c in alive:
            for s in range(4):
                start = 4 * c + s
                if seen[start]:
                    continue
                cyc = []
                cur = start
                while True:
                    cyc.append(cur)
                    t = through(cur)
                    cyc.append(t)
                    cur = self.pair[t]
                    if cur == start:
                        break
                flip = 1
                for k, x in enumerate(cyc):
                    h = self.hint[x]
                    if h:
                        flip = 1 if h == (-1 if k % 2 == 0 else 1) else -1
                        break
                cc = next((col[x] for x in cyc if col[x] >= 0), -1)
                if cc < 0:
                    cc = next_color
                    next_color += 1
                for k, x in enumerate(cyc):
                    seen[x] = True
                    orient[x] = (-1 if k % 2 == 0 else 1) * flip
                    col[x] = cc
        newidx = {c: i for i, c in enumerate(alive)}
        rot = {}
        over_in = np.empty(len(alive), dtype=np.int64)
        for c in alive:
            u = self.under[c]
            r = u if orient[4 * c + u] == -1 else u + 2
            rot[c] = r
            o = u + 1 if orient[4 * c + u + 1] == -1 else (u + 3) % 4
            over_in[newidx[c]] = (o - r) % 4

        def nd(x):
            c = x // 4
            return 4 * newidx[c] + (x % 4 - rot[c]) % 4

        m = len(alive)
        pair = np.empty(4 * m, dtype=np.int64)
        color = np.empty(4 * m, dtype=np.int64)
        for c in alive:
            for s in range(4):
                x = 4 * c + s
                pair[nd(x)] = nd(self.pair[x])
                color[nd(x)] = col[x]
        origin = [self.origin[c] for c in alive]
        return Darts(pair, over_in, color, self.loops, self._loop_colors(col)), origin

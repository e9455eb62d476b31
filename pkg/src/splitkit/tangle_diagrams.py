"""Diagrams of rational tangles, their closures, and local tangle surgery.

A tangle is held as crossings (ccw ray order plus under-parity) and a
pairing of "ends".  Ends ``>= 0`` are darts ``4*i + s`` of the tangle's own
crossings; the four boundary ports are the negative ends below.  The ray
order of a crossing, read in the tangle's frame, is SE, NE, NW, SW.  Under
parity 0 puts the SW-NE strand on top, which is the ``[+1]`` tangle.

Values follow :func:`splitkit.slopes.cf_eval`: the vector ``[c1, ..., cn]``
is built as ``c1 + 1/(c2 + 1/(...))``, with ``T + k`` adding k horizontal
twists on the east side and ``1/T`` realised as rotate-then-mirror.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .builder import Builder
from .diagram import Darts, PDCode
from .slopes import ProjectiveRational, TwistVector, cf_expand

NW, NE, SW, SE = -1, -2, -3, -4
PORTS = (NW, NE, SW, SE)
_ROT = {NW: SW, NE: NW, SE: NE, SW: SE}  # quarter turn counter-clockwise


@dataclass
class TangleDiagram:
    under: list[int] = field(default_factory=list)
    pair: dict[int, int] = field(default_factory=dict)

    @classmethod
    def zero(cls) -> "TangleDiagram":
        t = cls()
        t._link(NW, NE)
        t._link(SW, SE)
        return t

    @classmethod
    def infinity(cls) -> "TangleDiagram":
        t = cls()
        t._link(NW, SW)
        t._link(NE, SE)
        return t

    @classmethod
    def integer(cls, k: int) -> "TangleDiagram":
        t = cls.zero()
        t.add_twists(k)
        return t

    @classmethod
    def from_vector(cls, tv: TwistVector | Sequence[int]) -> "TangleDiagram":
        entries = list(tv)
        if not entries:
            return cls.infinity()
        t = cls.integer(entries[-1])
        for c in reversed(entries[:-1]):
            t = t.inverted()
            t.add_twists(c)
        return t

    @classmethod
    def from_slope(cls, r: ProjectiveRational) -> "TangleDiagram":
        return cls.from_vector(cf_expand(r))

    def copy(self) -> "TangleDiagram":
        return TangleDiagram(list(self.under), dict(self.pair))

    @property
    def crossing_count(self) -> int:
        return len(self.under)

    def _link(self, a: int, b: int) -> None:
        self.pair[a] = b
        self.pair[b] = a

    def add_twists(self, k: int) -> None:
        """Add |k| horizontal half-twists on the east side (sign of k = handedness)."""
        for _ in range(abs(k)):
            i = len(self.under)
            self.under.append(0 if k > 0 else 1)
            base = 4 * i
            east_n, east_s = self.pair[NE], self.pair[SE]
            if east_n == SE:
                self._link(base + 2, base + 3)
            else:
                self._link(base + 2, east_n)
                self._link(base + 3, east_s)
            self._link(NE, base + 1)
            self._link(SE, base + 0)

    def rotated(self) -> "TangleDiagram":
        t = TangleDiagram(list(self.under), {})
        for a, b in self.pair.items():
            t.pair[_ROT.get(a, a)] = _ROT.get(b, b)
        return t

    def mirrored(self) -> "TangleDiagram":
        return TangleDiagram([1 - u for u in self.under], dict(self.pair))

    def inverted(self) -> "TangleDiagram":
        return self.rotated().mirrored()

    def install(self, b: Builder, port_ends: dict[int, int]) -> list[int]:
        """Add this tangle to a builder and wire its ports.

        ``port_ends`` maps every port to a builder dart or to another port
        (a closure strand).  Returns the builder base dart of each new
        crossing.  Strands that close up without meeting a crossing are
        counted as free loops.
        """
        outside = {}
        for p in PORTS:
            q = port_ends[p]
            outside[p] = ("p", q) if q < 0 else ("x", q)
            if q < 0 and port_ends.get(q) != p:
                raise ValueError("closure strands must pair ports symmetrically")
        port_of = {q: p for p, q in port_ends.items() if q >= 0}
        bases = [b.add_crossing(u) for u in self.under]

        def inside(e):
            f = self.pair[e]
            return ("p", f) if f < 0 else ("t", f)

        def builder_dart(node):
            kind, v = node
            return bases[v // 4] + v % 4 if kind == "t" else v

        seen_ports = set()
        done = set()

        def walk(node, via_inside):
            while node[0] == "p":
                p = node[1]
                if p in seen_ports:
                    return None  # closed loop made of port strands only
                seen_ports.add(p)
                # leave through the other side of the port
                node = outside[p] if via_inside else inside(p)
                via_inside = not via_inside
            return node

        starts = [(("t", e), True) for e in self.pair if e >= 0]
        starts += [(("x", d), False) for d in port_of]
        for node, is_tangle in starts:
            if node in done:
                continue
            if is_tangle:
                end = walk(inside(node[1]), True)
            else:
                end = walk(("p", port_of[node[1]]), False)
            done.add(node)
            done.add(end)
            b.link(builder_dart(node), builder_dart(end))
        for p in PORTS:
            if p in seen_ports:
                continue
            walk(("p", p), True)
            b.loops += 1
            b.loop_colors.append(-1)
        return bases


def _symmetric(ends: dict[int, int]) -> dict[int, int]:
    out = dict(ends)
    for p, q in ends.items():
        if q < 0:
            out[q] = p
    return out


def _closure(t: TangleDiagram, ends: dict[int, int]) -> PDCode:
    b = Builder()
    t.install(b, _symmetric(ends))
    dd, _ = b.finalize()
    return dd.to_pd()


def numerator_closure(t: TangleDiagram) -> PDCode:
    """Join NW to NE and SW to SE."""
    return _closure(t, {NW: NE, SW: SE})


def denominator_closure(t: TangleDiagram) -> PDCode:
    """Join NW to SW and NE to SE."""
    return _closure(t, {NW: SW, NE: SE})


def rational_link(r: ProjectiveRational | str) -> PDCode:
    """Numerator closure of the rational tangle with the given slope."""
    if isinstance(r, str):
        r = ProjectiveRational.parse(r)
    return numerator_closure(TangleDiagram.from_slope(r))


# --------------------------------------------------------------------------
# local surgery on a diagram


def crossing_frame(dd: Darts, c: int) -> dict[int, int]:
    """Ports of the ball around crossing c, read so that c is the [+1] tangle.

    Slot s of the crossing faces port SE, NE, NW, SW for s = 0, 1, 2, 3;
    slots 1 and 3 carry the over-strand, which is the SW-NE strand of
    ``[+1]``.
    """
    return {SE: 4 * c + 0, NE: 4 * c + 1, NW: 4 * c + 2, SW: 4 * c + 3}


def replace_crossing_tangle(d: PDCode, c: int, slope: ProjectiveRational | TwistVector | Sequence[int]) -> PDCode:
    """Swap the ball around crossing ``c`` for the rational tangle of ``slope``.

    Slopes are read in the frame where the crossing itself is ``1/1``, so
    ``1/1`` returns the same link and ``-1/1`` is the crossing change.
    """
    if not 0 <= c < len(d):
        raise IndexError(f"crossing index {c} out of range (0..{len(d) - 1})")
    if isinstance(slope, ProjectiveRational):
        t = TangleDiagram.from_slope(slope)
    else:
        t = TangleDiagram.from_vector(slope)
    dd = d.darts
    b = Builder.from_darts(dd)
    frame = crossing_frame(dd, c)
    slot_port = {v: p for p, v in frame.items()}
    ends = {}
    for p, x in frame.items():
        y = int(dd.pair[x])
        ends[p] = slot_port[y] if y // 4 == c else y
    b.dead.add(c)
    t.install(b, ends)
    nd, _ = b.finalize()
    return nd.to_pd()


def braid_closure(word: Sequence[int], strands: int) -> PDCode:
    """Closure of a braid word; generator ``i`` (1-based) is a positive crossing, ``-i`` its inverse."""
    if strands < 1:
        raise ValueError("need at least one strand")
    labels = list(range(1, strands + 1))
    first = list(labels)
    nxt = strands + 1
    xs, signs = [], []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        a, bb = labels[i], labels[i + 1]
        a2, b2 = nxt, nxt + 1
        nxt += 2
        # strand a runs SW->NE, strand bb runs SE->NW (strands point upward)
        if g > 0:
            xs.append([bb, a2, b2, a])
            signs.append(1)
        else:
            xs.append([a, bb, a2, b2])
            signs.append(-1)
        labels[i], labels[i + 1] = b2, a2
    ren = {}
    loops = 0
    for start, end in zip(first, labels):
        if start == end:
            loops += 1
        ren[end] = start
    xs = [[ren.get(v, v) for v in x] for x in xs]
    return PDCode.from_tuples(xs, signs, loops)

"""Certified split / totally split / unlink verdicts for link diagrams.

Certification is one-sided in both directions:

* positive verdicts come with a replayable move sequence ending in a
  disconnected (or crossingless) diagram;
* ``not_split`` is only returned with a concrete obstruction, either a
  connected linking graph or a non-zero determinant (a split link has a
  branched double cover with infinite first homology, so determinant 0).

Anything else is ``unknown``, carrying the budget that was spent.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .diagram import (
    Darts,
    DisconnectedDiagramError,
    PDCode,
    _subdarts,
    component_count,
    emit_pd,
    is_disconnected,
    linking_matrix,
    parse_pd,
)
from .homology import determinant
from .moves import Budget, Move, apply_moves, greedy_simplify, reidemeister_neighborhood

KINDS = ("unknown", "not_split", "split", "totally_split", "unlink")


@dataclass(frozen=True)
class SplitObstruction:
    not_split: bool
    edges: tuple[tuple[int, int, int], ...]  # (i, j, lk) for every non-zero pair
    groups: tuple[tuple[int, ...], ...]  # connected pieces of the linking graph

    def to_dict(self):
        return {"not_split": self.not_split, "edges": [list(e) for e in self.edges],
                "groups": [list(g) for g in self.groups]}


@dataclass(frozen=True)
class SplitVerdict:
    kind: str
    components: tuple[int, ...]
    partition: tuple[tuple[int, ...], ...] = ()
    witness: tuple[Move, ...] = ()
    obstruction: dict | None = None
    budget: Budget | None = None
    diagram: str = ""
    pieces: tuple["SplitVerdict", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown verdict kind {self.kind!r}")

    @property
    def is_split(self) -> bool:
        return self.kind in ("split", "totally_split", "unlink") and len(self.components) >= 2

    @property
    def is_totally_split(self) -> bool:
        return self.kind in ("totally_split", "unlink")

    @property
    def is_unlink(self) -> bool:
        return self.kind == "unlink"

    @property
    def certified(self) -> bool:
        return self.kind != "unknown"

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "components": list(self.components),
            "partition": [list(p) for p in self.partition],
            "witness": [m.to_dict() for m in self.witness],
            "diagram": self.diagram,
        }
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction
        if self.budget is not None:
            out["budget"] = self.budget.to_dict()
        if self.pieces:
            out["pieces"] = [p.to_dict() for p in self.pieces]
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> "SplitVerdict":
        b = obj.get("budget")
        return cls(
            kind=obj["kind"],
            components=tuple(obj["components"]),
            partition=tuple(tuple(p) for p in obj.get("partition", [])),
            witness=tuple(Move.from_dict(m) for m in obj.get("witness", [])),
            obstruction=obj.get("obstruction"),
            budget=Budget(**b) if b else None,
            diagram=obj.get("diagram", ""),
            pieces=tuple(cls.from_dict(p) for p in obj.get("pieces", [])),
        )


def obstruct_split(m) -> SplitObstruction:
    """Linking-graph test: connected graph on components means not split."""
    m = np.asarray(m)
    k = m.shape[0]
    if k < 2:
        raise ValueError("splitting needs at least two components")
    edges = tuple((i, j, int(m[i, j])) for i in range(k) for j in range(i + 1, k) if m[i, j])
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j, _ in edges:
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    gs = tuple(sorted(tuple(g) for g in groups.values()))
    return SplitObstruction(len(gs) == 1, edges, gs)


def _det_or_zero(d: PDCode) -> int:
    try:
        return determinant(d)
    except DisconnectedDiagramError:
        return 0


def _darts_pieces(dd: Darts) -> list[tuple[list[int], list[int]]]:
    """(crossings, colours) of every connected piece, loops last."""
    out = []
    if dd.n:
        labels = kernels.piece_labels(dd.pair, dd.n)
        groups: dict[int, list[int]] = {}
        for c in range(dd.n):
            groups.setdefault(int(labels[c]), []).append(c)
        for root in sorted(groups):
            cs = groups[root]
            cols = sorted({int(dd.color[4 * c + s]) for c in cs for s in range(4)})
            out.append((cs, cols))
    for col in dd.loop_colors:
        out.append(([], [col]))
    return out


def _unknot_search(d: PDCode, budget: Budget) -> tuple[Move, ...] | None:
    if len(d) == 0:
        return ()
    g, path = greedy_simplify(d)
    if len(g) == 0:
        return path
    for nb in reidemeister_neighborhood(d, budget, use_colors=False):
        if len(nb.diagram) == 0:
            return nb.moves
    return None


def certify_split(d: PDCode, budget: Budget | None = None, components: tuple[int, ...] | None = None) -> SplitVerdict:
    """Search for a witness that ``d`` is split; upgrade through the pieces.

    ``components`` names the components of ``d`` in the caller's numbering
    (defaults to 0..k-1); partitions are reported in that numbering.
    """
    budget = budget or Budget()
    k = component_count(d)
    comps = tuple(components) if components is not None else tuple(range(k))
    if len(comps) != k:
        raise ValueError("components list does not match the diagram")
    text = emit_pd(d)
    if k == 0:
        return SplitVerdict("unlink", comps, (), (), None, budget, text)
    if k == 1:
        return _certify_knot(d, budget, comps, text)

    obs = obstruct_split(linking_matrix(d))
    if obs.not_split:
        return SplitVerdict("not_split", comps, (), (), {"type": "linking", "claim": "not split",
                                                         **obs.to_dict()}, budget, text)
    if not is_disconnected(d):
        det = _det_or_zero(d)
        if det != 0:
            return SplitVerdict("not_split", comps, (), (), {"type": "determinant", "claim": "not split",
                                                             "determinant": det}, budget, text)

    found = None
    for nb in reidemeister_neighborhood(d, budget, use_colors=False):
        if is_disconnected(nb.diagram):
            found = nb
            break
    if found is None:
        return SplitVerdict("unknown", comps, (), (), {"type": "budget-exhausted", **obs.to_dict()}, budget, text)

    dd = found.darts
    partition = []
    pieces = []
    totally = True
    unknots = True
    for cs, cols in _darts_pieces(dd):
        names = tuple(comps[c] for c in cols)
        if cs:
            sub = _subdarts(dd, cs).to_pd()
        else:
            sub = PDCode((), (), 1)
        # colours inside ``sub`` are ranked copies of ``cols``
        v = certify_split(sub, budget, names)
        pieces.append(v)
        if len(names) == 1:
            partition.append(names)
            unknots = unknots and v.kind == "unlink"
        elif v.is_split:
            partition.extend(v.partition)
            totally = totally and v.is_totally_split
            unknots = unknots and v.is_unlink
        else:
            partition.append(names)
            totally = unknots = False
    partition.sort()
    kind = "unlink" if totally and unknots else ("totally_split" if totally else "split")
    return SplitVerdict(kind, comps, tuple(partition), found.moves, None, budget, text, tuple(pieces))


def _certify_knot(d: PDCode, budget: Budget, comps, text) -> SplitVerdict:
    if not is_disconnected(d):
        det = _det_or_zero(d)
        if det != 1:
            return SplitVerdict("not_split", comps, (comps,), (),
                                {"type": "determinant", "claim": "not an unknot", "determinant": det},
                                budget, text)
    path = _unknot_search(d, budget)
    if path is None:
        return SplitVerdict("unknown", comps, (comps,), (), {"type": "budget-exhausted"}, budget, text)
    return SplitVerdict("unlink", comps, (comps,), tuple(path), None, budget, text)


def is_unlink(d: PDCode, budget: Budget | None = None) -> bool | None:
    """True (certified unlink), False (obstructed) or None (unknown at budget)."""
    v = certify_split(d, budget)
    if v.kind == "unlink":
        return True
    if v.kind == "not_split":
        return False
    if v.kind in ("split", "totally_split"):
        # some piece is not known to be trivial; look for a refutation there
        for p in v.pieces:
            if _refutes_unlink(p):
                return False
    return None


def _refutes_unlink(v: SplitVerdict) -> bool:
    if v.kind == "not_split":
        return True
    return any(_refutes_unlink(p) for p in v.pieces)


def replay_witness(v: SplitVerdict) -> bool:
    """Re-apply the witness moves and check the claimed end state."""
    if not v.diagram and not v.components:
        return True
    d = parse_pd(v.diagram) if v.diagram else PDCode((), (), 1)
    end = apply_moves(d, v.witness)
    if v.kind in ("split", "totally_split", "unlink") and len(v.components) >= 2:
        if not is_disconnected(end):
            return False
    if v.kind == "unlink" and len(v.components) == 1 and len(end) != 0:
        return False
    return all(replay_witness(p) for p in v.pieces)

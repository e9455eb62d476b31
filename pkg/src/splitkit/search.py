"""Is u, s, s_d, ts or ts_d equal to one?  Desk-scale search.

The search changes one crossing at a time, in the input diagram and in a
small coloured Reidemeister neighbourhood of it, and asks
:func:`splitkit.split.certify_split` for a certificate.  A "no" is only
ever given on diagram-independent grounds (linking numbers); exhausting
the candidates yields ``unknown``.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .diagram import CrossingRef, PDCode, change_crossing, component_count, crossing_ref, emit_pd, linking_matrix
from .moves import Budget, Move, reidemeister_neighborhood
from .split import SplitVerdict, certify_split, obstruct_split

QUESTIONS = ("u", "s", "sd", "ts", "tsd")
_ALIASES = {"s_d": "sd", "ts_d": "tsd"}


def normalize_question(q: str) -> str:
    q = _ALIASES.get(q, q)
    if q not in QUESTIONS:
        raise ValueError(f"unknown question {q!r}; expected one of {', '.join(QUESTIONS)}")
    return q


def question_mode(q: str) -> str:
    return "distinct_components" if normalize_question(q) in ("sd", "tsd") else "any"


def _verdict_answers(q: str, v: SplitVerdict) -> bool:
    q = normalize_question(q)
    if q == "u":
        return v.is_unlink
    if q in ("s", "sd"):
        return v.is_split
    return v.is_totally_split


@dataclass(frozen=True)
class Witness:
    diagram: str  # diagram (PD text) in which the crossing is changed
    moves: tuple[Move, ...]  # from the input diagram to ``diagram``
    crossing: CrossingRef  # component indices in the input's numbering
    verdict: SplitVerdict

    def to_dict(self):
        return {"diagram": self.diagram, "moves": [m.to_dict() for m in self.moves],
                "crossing": self.crossing.to_dict(), "verdict": self.verdict.to_dict()}


@dataclass(frozen=True)
class SearchReport:
    question: str
    answer: str  # "yes" | "no" | "unknown"
    witness: Witness | None = None
    obstruction: dict | None = None
    candidates_examined: int = 0
    budget: Budget | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"question": self.question, "answer": self.answer, "candidates_examined": self.candidates_examined}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction
        if self.budget is not None:
            out["budget"] = self.budget.to_dict()
        out.update(self.extra)
        return out


def enumerate_crossing_changes(d: PDCode, mode: str = "any") -> list[CrossingRef]:
    if mode not in ("any", "distinct_components"):
        raise ValueError(f"unknown mode {mode!r}")
    refs = [crossing_ref(d, i) for i in range(len(d))]
    if mode == "distinct_components":
        refs = [r for r in refs if r.is_mixed]
    return refs


def _after_change_options(m: np.ndarray, mode: str) -> Iterable[np.ndarray]:
    k = m.shape[0]
    if mode == "any":
        yield m
    for i in range(k):
        for j in range(i + 1, k):
            for step in (-1, 1):
                mm = m.copy()
                mm[i, j] += step
                mm[j, i] += step
                yield mm


def lk_feasibility(m, question: str) -> dict | None:
    """Obstruction (as a dict) when no single change can meet the target.

    A self-crossing change leaves every linking number alone, and a
    change between components i and j moves lk(i, j) by exactly one, so
    the possible linking matrices after one change are known in advance.
    """
    q = normalize_question(question)
    m = np.asarray(m, dtype=np.int64)
    k = m.shape[0]
    if k < 2:
        if q == "u":
            return None
        raise ValueError(f"question {q} needs at least two components")
    mode = question_mode(q)
    for mm in _after_change_options(m, mode):
        if q in ("s", "sd"):
            if not obstruct_split(mm).not_split:
                return None
        elif not mm.any():
            return None
    need = "a split linking graph" if q in ("s", "sd") else "all linking numbers zero"
    via = "inter-component changes" if mode == "distinct_components" else "one crossing change"
    return {"type": "linking", "claim": f"{via} cannot reach {need}",
            "linking_matrix": m.tolist()}


def _candidates(d: PDCode, mode: str, neighborhood: Budget, accept: Callable | None):
    for nb in reidemeister_neighborhood(d, neighborhood, use_colors=True):
        if accept is not None and not accept(nb):
            continue
        names = nb.darts.component_colors()
        for ref in enumerate_crossing_changes(nb.diagram, mode):
            mapped = CrossingRef(ref.index, names[ref.over_component], names[ref.under_component])
            yield nb, ref, mapped, tuple(names)


def _evaluate(args):
    q, text, index, names, budget = args
    from .diagram import parse_pd

    d = parse_pd(text)
    changed = change_crossing(d, index)
    if len(names) >= 2:
        target_ok = lk_feasibility_after(linking_matrix(changed), q)
        if not target_ok:
            return None
    v = certify_split(changed, budget, names)
    return v


def lk_feasibility_after(m, q: str) -> bool:
    """Could a diagram with this linking matrix satisfy the target at all?"""
    q = normalize_question(q)
    m = np.asarray(m)
    if m.shape[0] < 2:
        return True
    if q in ("s", "sd"):
        return not obstruct_split(m).not_split
    return not m.any()


def question_is_one(d: PDCode, question: str, budget: Budget | None = None,
                    neighborhood: Budget | None = None, jobs: int = 1, seed: int | None = None) -> SearchReport:
    """Decide (at budget) whether one crossing change answers ``question``.

    Candidates are the crossings of ``d`` and, when ``neighborhood`` allows
    moves, of the diagrams reachable from it.
    """
    return _search(d, question, budget, neighborhood, jobs, seed, False, None)


def all_witnesses(d: PDCode, question: str, budget: Budget | None = None,
                  neighborhood: Budget | None = None, jobs: int = 1,
                  accept: Callable | None = None) -> tuple[list[Witness], int]:
    """Every certified witness among the candidates, plus the candidate count.

    ``accept`` filters which neighbourhood diagrams contribute candidates.
    """
    return _search(d, question, budget, neighborhood, jobs, None, True, accept)


def _search(d, question, budget, neighborhood, jobs, seed, find_all, accept):
    q = normalize_question(question)
    budget = budget or Budget()
    neighborhood = neighborhood or Budget(max_crossings=len(d), max_moves=0, max_states=1)
    k = component_count(d)
    if q != "u" and k < 2:
        raise ValueError(f"question {q} needs at least two components")
    obs = lk_feasibility(linking_matrix(d), q) if k >= 2 else None
    if obs is not None:
        rep = SearchReport(q, "no", None, obs, 0, budget)
        return ([], 0) if find_all else rep

    already = certify_split(d, budget)
    if _verdict_answers(q, already):
        obs = {"type": "already", "claim": f"the input already meets the target, so {q} = 0",
               "verdict": already.to_dict()}
        rep = SearchReport(q, "no", None, obs, 0, budget)
        return ([], 0) if find_all else rep

    cands = list(_candidates(d, question_mode(q), neighborhood, accept))
    if seed is not None:
        random.Random(seed).shuffle(cands)
    tasks = [(q, emit_pd(nb.diagram), ref.index, names, budget) for nb, ref, _, names in cands]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = ex.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            verdicts = list(results) if find_all else _first_hit(results, q)
    else:
        verdicts = (_evaluate(t) for t in tasks)
        verdicts = list(verdicts) if find_all else _first_hit(verdicts, q)

    found = []
    examined = 0
    for (nb, _, mapped, _), v in zip(cands, verdicts):
        examined += 1
        if v is not None and _verdict_answers(q, v):
            w = Witness(emit_pd(nb.diagram), nb.moves, mapped, v)
            if not find_all:
                return SearchReport(q, "yes", w, None, examined, budget)
            found.append(w)
    if find_all:
        return found, examined
    return SearchReport(q, "unknown", None, None, examined, budget,
                        {"neighborhood": neighborhood.to_dict()})


def _first_hit(results, q):
    """Consume verdicts lazily, stopping after the first positive one."""
    out = []
    for v in results:
        out.append(v)
        if v is not None and _verdict_answers(q, v):
            break
    return out

"""``splitkit`` command line: every operation, JSON in and out.

Exit codes: 0 success, 2 usage error, 3 malformed input (bad slope, bad
PD code, unknown fixture), 4 a search ran out of budget without a
certified answer.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .circles import circle_linking_profile, circles_for_crossing, circles_for_replacement, whitehead_census
from .diagram import (
    DiagramError,
    PDCode,
    bound_report,
    change_crossing,
    component_count,
    components,
    emit_pd,
    linking_matrix,
    parse_pd,
    triangulation_bound,
)
from .fixtures import fixture_names, fixture_text
from .homology import branched_cover_h1, determinant, goeritz_matrix, h2_nonzero_rule
from .moves import Budget, simplify
from .search import QUESTIONS, question_is_one
from .slopes import ProjectiveRational, TwistVector, cf_eval, cf_expand, distance
from .split import certify_split
from .tangles import enumerate_twisted_solutions, insert_central_twists, symmetric_expansion

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3, 4


class InputError(Exception):
    pass


class UsageError(Exception):
    pass


# let "-3/2" and "-inf" through as positional slopes
_NEGATIVE = re.compile(r"^-(\d+(/-?\d+)?|\d*\.\d+|inf)$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        self._negative_number_matcher = _NEGATIVE

    def error(self, message):
        raise UsageError(message)


def _emit(obj, args) -> None:
    indent = 2 if getattr(args, "pretty", False) else None
    seps = None if indent else (",", ":")
    print(json.dumps(obj, indent=indent, separators=seps, sort_keys=False))


def _slope(text: str) -> ProjectiveRational:
    try:
        return ProjectiveRational.parse(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _vector(text: str) -> TwistVector:
    try:
        return TwistVector.parse(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _read_diagram(args) -> PDCode:
    src = args.input
    if args.fixture:
        try:
            text = fixture_text(args.fixture)
        except KeyError as e:
            raise InputError(e.args[0]) from None
    elif args.pd is not None:
        text = args.pd
    elif src is None or src == "-":
        text = sys.stdin.read()
    elif Path(src).is_file():
        text = Path(src).read_text()
    elif src in fixture_names():
        text = fixture_text(src)
    else:
        raise InputError(f"{src!r} is neither a file nor a fixture ({', '.join(fixture_names())})")
    try:
        return parse_pd(text)
    except DiagramError as e:
        raise InputError(f"bad diagram: {e}") from None


def _budget(args) -> Budget:
    try:
        return Budget(args.max_crossings, args.max_moves, args.max_states)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _diagram_json(d: PDCode) -> dict:
    return {"pd": emit_pd(d), **d.to_dict(), "crossing_count": len(d), "component_count": component_count(d)}


# --------------------------------------------------------------------------
# handlers


def cmd_slope(args):
    if args.action == "dist":
        return {"distance": distance(_slope(args.a), _slope(args.b))}
    if args.action == "eval":
        r = cf_eval(_vector(args.a))
        return {"slope": str(r), "p": r.p, "q": r.q}
    r = _slope(args.a)
    return {"slope": str(r), "vector": list(cf_expand(r))}


def cmd_tangle(args):
    try:
        if args.action == "classify":
            r = _slope(args.a)
            sols = enumerate_twisted_solutions(r, args.d)
            return {"slope": str(r), "d": args.d, "solutions": [s.to_dict() for s in sols],
                    "core_arc_possible": True}
        if args.action == "expand":
            v = symmetric_expansion(int(args.a), int(args.b))
            return {"a": int(args.a), "b": int(args.b), "expansion": list(v), "slope": str(cf_eval(v))}
        v, r = insert_central_twists(_vector(args.a), int(args.b))
        return {"vector": list(v), "slope": str(r)}
    except ValueError as e:
        raise InputError(str(e)) from None


def cmd_diagram(args):
    if args.action == "bound":
        if args.crossings is None:
            d = _read_diagram(args)
            c = len(d)
        else:
            c = args.crossings
        if c < 0:
            raise InputError("crossing number must be non-negative")
        return {"crossings": c, "tetrahedra": triangulation_bound(c), "count_bound": bound_report(c)}
    d = _read_diagram(args)
    if args.action == "parse":
        return {**_diagram_json(d), "components": [list(c) for c in components(d)]}
    if args.action == "lk":
        return {"linking_matrix": linking_matrix(d).tolist()}
    if args.action == "change":
        if args.crossing is None:
            raise UsageError("diagram change needs --crossing")
        try:
            out = change_crossing(d, args.crossing)
        except IndexError as e:
            raise InputError(str(e)) from None
        return _diagram_json(out)
    s = simplify(d, _budget(args))
    return {**_diagram_json(s), "input_crossings": len(d)}


def cmd_split(args):
    v = certify_split(_read_diagram(args), _budget(args))
    return v.to_dict(), (EXIT_BUDGET if v.kind == "unknown" else EXIT_OK)


def cmd_search(args):
    d = _read_diagram(args)
    nb = Budget(max(len(d), args.max_crossings), args.neighborhood_moves, args.max_states)
    try:
        rep = question_is_one(d, args.question, _budget(args), nb, jobs=args.jobs, seed=args.seed)
    except ValueError as e:
        raise InputError(str(e)) from None
    return rep.to_dict(), (EXIT_BUDGET if rep.answer == "unknown" else EXIT_OK)


def cmd_circle(args):
    if args.action == "for-slope":
        try:
            specs = circles_for_replacement(_slope(args.slope))
        except ValueError as e:
            raise InputError(str(e)) from None
        return {"slope": args.slope, "circles": [s.to_dict() for s in specs]}
    if args.action == "census":
        return whitehead_census(jobs=args.jobs).to_dict()
    d = _read_diagram(args)
    if args.crossing is None:
        raise UsageError("circle profile needs --crossing")
    try:
        specs = circles_for_crossing(d, args.crossing)
    except IndexError as e:
        raise InputError(str(e)) from None
    out = []
    for s in specs:
        if args.framing is not None and s.framing % 2 != args.framing % 2:
            continue
        out.append({**s.to_dict(), "profile": list(circle_linking_profile(d, s))})
    return {"crossing": args.crossing, "circles": out}


def cmd_homology(args):
    if args.action == "h2rule":
        lk = [[0, args.lk], [args.lk, 0]] if args.components == 2 else None
        choice = tuple(range(args.sublink_size))
        try:
            r = h2_nonzero_rule(args.components, args.sublink_size, lk, choice)
        except ValueError as e:
            raise InputError(str(e)) from None
        return r.to_dict()
    d = _read_diagram(args)
    try:
        if args.action == "goeritz":
            return goeritz_matrix(d).to_dict()
        if args.action == "h1":
            return {"h1": branched_cover_h1(d).to_dict()}
        return {"determinant": determinant(d)}
    except DiagramError as e:
        raise InputError(str(e)) from None


# --------------------------------------------------------------------------
# parser


def _add_input(p):
    p.add_argument("input", nargs="?", help="PD file, fixture name, or - for stdin (default)")
    p.add_argument("--fixture", help="named fixture")
    p.add_argument("--pd", help="inline PD text")


def _add_budget(p, crossings=8, moves=20):
    p.add_argument("--max-crossings", type=int, default=crossings)
    p.add_argument("--max-moves", type=int, default=moves)
    p.add_argument("--max-states", type=int, default=20000)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON")
    common.add_argument("--seed", type=int, default=None, help="fixes any randomised search order")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")

    p = _Parser(prog="splitkit", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    sp = sub.add_parser("slope", parents=[common], help="slope arithmetic")
    sp.add_argument("action", choices=["dist", "eval", "expand"])
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")
    sp.set_defaults(func=cmd_slope)

    tp = sub.add_parser("tangle", parents=[common], help="trivial tangle replacements")
    tp.add_argument("action", choices=["classify", "expand", "insert"])
    tp.add_argument("a")
    tp.add_argument("b", nargs="?")
    tp.add_argument("--d", type=int, default=2, help="replacement distance for classify")
    tp.set_defaults(func=cmd_tangle)

    dp = sub.add_parser("diagram", parents=[common], help="PD diagrams")
    dp.add_argument("action", choices=["parse", "lk", "change", "simplify", "bound"])
    _add_input(dp)
    dp.add_argument("--crossing", type=int)
    dp.add_argument("--crossings", type=int, help="crossing number for bound")
    _add_budget(dp)
    dp.set_defaults(func=cmd_diagram)

    lp = sub.add_parser("split", parents=[common], help="split certification")
    lp.add_argument("action", choices=["certify"])
    _add_input(lp)
    _add_budget(lp)
    lp.set_defaults(func=cmd_split)

    qp = sub.add_parser("search", parents=[common], help="is the invariant equal to one?")
    qp.add_argument("action", choices=["one"])
    _add_input(qp)
    qp.add_argument("--question", required=True, choices=list(QUESTIONS) + ["s_d", "ts_d"])
    qp.add_argument("--neighborhood-moves", type=int, default=0,
                    help="also change crossings of diagrams this many moves away")
    _add_budget(qp)
    qp.set_defaults(func=cmd_search)

    cp = sub.add_parser("circle", parents=[common], help="crossing circles")
    cp.add_argument("action", choices=["for-slope", "profile", "census"])
    cp.add_argument("slope", nargs="?", help="half-integer slope for for-slope")
    cp.add_argument("--fixture")
    cp.add_argument("--pd")
    cp.add_argument("--crossing", type=int)
    cp.add_argument("--framing", type=int)
    cp.set_defaults(func=cmd_circle, input=None)

    hp = sub.add_parser("homology", parents=[common], help="branched double cover proxies")
    hp.add_argument("action", choices=["goeritz", "h1", "det", "h2rule"])
    _add_input(hp)
    hp.add_argument("--components", type=int, default=2)
    hp.add_argument("--sublink-size", type=int, default=1)
    hp.add_argument("--lk", type=int, default=0)
    hp.set_defaults(func=cmd_homology)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.group == "slope" and args.action == "dist" and args.b is None:
            raise UsageError("slope dist needs two slopes")
        if args.group == "tangle" and args.action in ("expand", "insert") and args.b is None:
            raise UsageError(f"tangle {args.action} needs two arguments")
        if args.group == "circle" and args.action == "for-slope" and args.slope is None:
            raise UsageError("circle for-slope needs a slope")
        if args.group == "circle" and args.action == "profile" and args.slope is not None:
            args.input = args.slope
        result = args.func(args)
    except UsageError as e:
        _emit({"error": {"type": "usage", "message": str(e)}}, argparse.Namespace(pretty=False))
        return EXIT_USAGE
    except InputError as e:
        _emit({"error": {"type": "input", "message": str(e)}}, args)
        return EXIT_INPUT
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    _emit(result, args)
    return code


if __name__ == "__main__":
    sys.exit(main())

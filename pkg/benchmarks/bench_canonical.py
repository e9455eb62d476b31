"""Compare the numba kernels with their pure-Python fallbacks.

Two measurements:

* kernel level: canonical codes and piece labels for a batch of perturbed
  diagrams, compiled vs interpreted, in one process;
* end to end: the Whitehead census run in a subprocess with and without
  ``SPLITKIT_PURE_PYTHON=1``.

Usage: python3 benchmarks/bench_canonical.py [--diagrams N] [--repeat R] [--skip-census]
"""
from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time

from splitkit import kernels
from splitkit._jit import HAVE_NUMBA
from splitkit.fixtures import load_fixture
from splitkit.moves import random_moves


def _batch(n: int, seed: int):
    rng = random.Random(seed)
    base = [load_fixture(k) for k in ("whitehead-l5a1", "chain-3", "torus-2-6", "trefoil")]
    out = []
    while len(out) < n:
        d, _ = random_moves(rng.choice(base), rng.randint(2, 8), rng, 14)
        if len(d):
            out.append(d.darts)
    return out


def _time(fn, batch, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for dd in batch:
            fn(dd)
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_bench(n: int, repeat: int, seed: int) -> dict:
    batch = _batch(n, seed)
    rows = {}
    pairs = {
        "canonical_code": (
            lambda dd: kernels.canonical_code_py(dd.pair, dd.over_in, dd.color, True),
            (lambda dd: kernels.canonical_code_jit(dd.pair, dd.over_in, dd.color, True)) if HAVE_NUMBA else None,
        ),
        "piece_labels": (
            lambda dd: kernels.piece_labels_py(dd.pair, dd.n),
            (lambda dd: kernels.piece_labels_jit(dd.pair, dd.n)) if HAVE_NUMBA else None,
        ),
    }
    for name, (py, jit) in pairs.items():
        row = {"python_s": _time(py, batch, repeat)}
        if jit is not None:
            jit(batch[0])  # compile outside the timed region
            row["numba_s"] = _time(jit, batch, repeat)
            row["speedup"] = row["python_s"] / row["numba_s"]
        rows[name] = row
    return {"diagrams": n, "mean_crossings": sum(dd.n for dd in batch) / n, "kernels": rows}


def census_bench() -> dict:
    code = "import time; from splitkit.circles import whitehead_census as w; w(); t=time.perf_counter(); w(); print(time.perf_counter()-t)"
    out = {}
    for label, pure in (("numba", "0"), ("python", "1")):
        env = dict(os.environ, SPLITKIT_PURE_PYTHON=pure)
        r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        out[f"{label}_s"] = float(r.stdout.strip())
    out["speedup"] = out["python_s"] / out["numba_s"]
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--diagrams", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-census", action="store_true")
    args = ap.parse_args(argv)
    report = {"numba_available": HAVE_NUMBA, **kernel_bench(args.diagrams, args.repeat, args.seed)}
    if not args.skip_census and HAVE_NUMBA:
        report["whitehead_census"] = census_bench()
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())

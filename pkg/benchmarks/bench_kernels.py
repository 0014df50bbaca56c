"""Compare the compiled and pure-Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--n 8] [--repeat 3]

Micro-benchmarks run both kernel modules on identical inputs in one
process and check that their outputs agree.  The end-to-end benchmark
builds G/B structure-constant tables in fresh subprocesses, once per
backend (FLAGCALC_PURE_PYTHON=1 forces the fallback).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

from flagcalc.polyring import _pykernel
from flagcalc.polyring.schubert import _TABLE
from flagcalc.weyl import all_permutations

try:
    from flagcalc.polyring import _ckernel
except ImportError:
    _ckernel = None


def _workload(n):
    perms = [w for w in all_permutations(n) if 2 <= w.length <= 4]
    polys = [_TABLE.packed(tuple(w.code)) for w in perms[:120]]
    return polys


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def micro(n, repeat):
    polys = _workload(n)
    pairs = [(f, g) for i, f in enumerate(polys[:40]) for g in polys[i:40]]
    big = [_pykernel.mul(f, g) for f, g in pairs[:200]]
    rows = []
    for name, job in [
        ("mul", lambda k: [k.mul(f, g) for f, g in pairs]),
        ("divdiff", lambda k: [k.divdiff(b, i) for b in big for i in range(1, n)]),
        ("peel", lambda k: [k.peel(b, lambda m: _TABLE.packed(_pykernel.exponents(m))) for b in big]),
    ]:
        tp, outp = _time(lambda: job(_pykernel), repeat)
        if _ckernel is None:
            rows.append((name, tp, None, None))
            continue
        tc, outc = _time(lambda: job(_ckernel), repeat)
        if outp != outc:
            raise SystemExit(f"backends disagree on {name}")
        rows.append((name, tp, tc, tp / tc))
    return rows


def end_to_end(n):
    code = (
        "import time; from flagcalc.cohomology import FlagSpace, cache as c;"
        "import tempfile; d=tempfile.mkdtemp(); t=time.perf_counter();"
        f"c.build_tables(FlagSpace.full_flag({n}), 4, d); print(time.perf_counter()-t)"
    )
    out = {}
    for label, env in [("cython", {}), ("python", {"FLAGCALC_PURE_PYTHON": "1"})]:
        if label == "cython" and _ckernel is None:
            continue
        proc = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env}, capture_output=True, text=True, check=True)
        out[label] = float(proc.stdout.strip())
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--table-n", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"compiled kernel available: {_ckernel is not None}")
    print(f"{'kernel':<10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, tp, tc, sp in micro(args.n, args.repeat):
        print(f"{name:<10}{tp:>12.4f}{(tc or float('nan')):>12.4f}{(sp or float('nan')):>10.2f}")
    e2e = end_to_end(args.table_n)
    print(f"\nG/B tables n={args.table_n} through codim 4:")
    for label, t in e2e.items():
        print(f"  {label:<8}{t:8.3f} s")


if __name__ == "__main__":
    main()

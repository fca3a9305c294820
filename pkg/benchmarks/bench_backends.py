"""Compare the compiled term-arithmetic kernel against the pure-Python twin.

Runs each workload in a fresh subprocess per backend (the backend is chosen
at import time) and prints a small table.

    python benchmarks/bench_backends.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = ("poly-mul", "ratfunc-normalize", "theorem1-chain")


def _run_workload(name: str, repeat: int) -> float:
    import random

    from singmin.exact import Polynomial, RationalExpr
    from singmin.exact.symbols import NVARS

    rng = random.Random(127)

    def rand_poly(n_terms: int, max_deg: int, bound: int = 99) -> Polynomial:
        t = {}
        for _ in range(n_terms):
            m = tuple(rng.randint(0, max_deg) if i < 4 else 0 for i in range(NVARS))
            t[m] = rng.randint(1, bound)
        return Polynomial(t)

    if name == "poly-mul":
        pairs = [(rand_poly(40, 6), rand_poly(40, 6)) for _ in range(6)]
        t0 = time.perf_counter()
        for _ in range(repeat):
            for a, b in pairs:
                (a * b) * (a + b)
        return (time.perf_counter() - t0) / repeat

    if name == "ratfunc-normalize":
        exprs = []
        for _ in range(4):
            a, b = rand_poly(10, 4), rand_poly(10, 4)
            c = rand_poly(6, 3)
            exprs.append((a * c, b * c))
        t0 = time.perf_counter()
        for _ in range(repeat):
            for num, den in exprs:
                e = RationalExpr(num, den)
                _ = e + e * e
        return (time.perf_counter() - t0) / repeat

    if name == "theorem1-chain":
        from singmin.proofs import run_theorem1

        t0 = time.perf_counter()
        for _ in range(repeat):
            report = run_theorem1()
            assert report.passed
        return (time.perf_counter() - t0) / repeat

    raise SystemExit(f"unknown workload {name!r}")


def _child(args: argparse.Namespace) -> None:
    from singmin.exact import BACKEND

    result = {"backend": BACKEND, "seconds": _run_workload(args.workload, args.repeat)}
    print(json.dumps(result))


def _drive(repeat: int) -> None:
    rows = []
    for workload in WORKLOADS:
        per_backend = {}
        for label, env_extra in (("cython", {}), ("python", {"SINGMIN_PURE_PYTHON": "1"})):
            env = dict(os.environ)
            env.pop("SINGMIN_PURE_PYTHON", None)
            env.update(env_extra)
            out = subprocess.run(
                [sys.executable, __file__, "--workload", workload, "--repeat", str(repeat)],
                env=env,
                capture_output=True,
                text=True,
                check=True,
            )
            doc = json.loads(out.stdout.strip().splitlines()[-1])
            per_backend[label] = doc
        rows.append((workload, per_backend))

    print(f"{'workload':22s} {'compiled':>12s} {'pure':>12s} {'speedup':>9s}")
    for workload, per in rows:
        compiled = per["cython"]["seconds"]
        pure = per["python"]["seconds"]
        note = "" if per["cython"]["backend"] == "cython" else "  (compiled kernel unavailable)"
        print(f"{workload:22s} {compiled:11.4f}s {pure:11.4f}s {pure / compiled:8.2f}x{note}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workload", choices=WORKLOADS, default=None)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if args.workload is None:
        _drive(args.repeat)
    else:
        _child(args)


if __name__ == "__main__":
    main()

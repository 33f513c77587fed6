"""Timing comparison between the compiled elimination kernels and the pure
Python twin.

Runs every workload twice in subprocesses, once per backend, so the numbers
come from identically fresh processes.  Workloads cover the raw eliminator,
kernel extraction, Smith form, and the real consumers: multiplier
presentations and a full extended table.

    python3 benchmarks/bench_kernels.py [--repeat N] [--inner WORKLOAD]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def bench_elim(repeat):
    from extburnside.kernels import Elim

    rng = random.Random(5)
    width, tags, nrows = 220, 20, 420
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        elim = Elim(width + tags, 8, 2, 3, pivot_width=width)
        for i in range(nrows):
            head = [rng.randrange(8) for _ in range(width)]
            elim.add_tagged(head, i % tags, tags)
        elim.finalize()
        hits = 0
        for _ in range(60):
            v = [rng.randrange(8) for _ in range(width + tags)]
            if elim.solve(v) is not None:
                hits += 1
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_kernel_rows(repeat):
    from extburnside.kernels import kernel_of_rows

    rng = random.Random(7)
    nrows, ncols = 160, 200
    rows = [[rng.randrange(9) for _ in range(ncols)] for _ in range(nrows)]
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        kernel_of_rows(rows, ncols, 9, 3, 2)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_smith(repeat):
    from extburnside.kernels import smith_zq

    rng = random.Random(11)
    nrows, ncols = 120, 120
    rows = [[rng.randrange(8) for _ in range(ncols)] for _ in range(nrows)]
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        smith_zq(rows, ncols, 8, 2, 3)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_multiplier(repeat):
    from extburnside.groups import group_from_spec
    from extburnside.multiplier import SubgroupMultiplier

    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for spec in ("S4", "A5"):
            SubgroupMultiplier(group_from_spec(spec))
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_s5_multiplier(repeat):
    from extburnside.groups import group_from_spec
    from extburnside.multiplier import SubgroupMultiplier

    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        SubgroupMultiplier(group_from_spec("S5"))
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_ext_table(repeat):
    from extburnside.groups import group_from_spec
    from extburnside.ring import ExtRing

    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        ring = ExtRing(group_from_spec("S4"))
        ring.extended_table()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


WORKLOADS = {
    "elim 420x240 mod 8": bench_elim,
    "kernel 160x200 mod 9": bench_kernel_rows,
    "smith 120x120 mod 8": bench_smith,
    "M(H) for S4 and A5": bench_multiplier,
    "M(S5)": bench_s5_multiplier,
    "S4 extended table": bench_ext_table,
}


def run_inner(name, repeat):
    from extburnside.kernels import BACKEND

    dt = WORKLOADS[name](repeat)
    print(json.dumps({"backend": BACKEND, "seconds": dt}))


def run_outer(repeat):
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
    results = {}
    backends = {}
    for mode, env_extra in (("c", {}), ("python", {"EBR_PURE_PYTHON": "1"})):
        env = dict(os.environ)
        env.pop("EBR_PURE_PYTHON", None)
        env.update(env_extra)
        for name in WORKLOADS:
            out = subprocess.run(
                [sys.executable, os.path.abspath(__file__),
                 "--inner", name, "--repeat", str(repeat)],
                capture_output=True, text=True, env=env, cwd=root, check=True,
            )
            rec = json.loads(out.stdout)
            results.setdefault(name, {})[mode] = rec["seconds"]
            backends[mode] = rec["backend"]
    if backends["c"] == "python":
        print("note: compiled backend unavailable, both columns are pure Python")
    width = max(len(n) for n in WORKLOADS)
    print(f"{'workload'.ljust(width)}  {'c':>9}  {'python':>9}  {'ratio':>6}")
    for name, times in results.items():
        ratio = times["python"] / times["c"] if times["c"] else float("inf")
        print(f"{name.ljust(width)}  {times['c']:>8.3f}s  {times['python']:>8.3f}s"
              f"  {ratio:>5.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--inner", choices=sorted(WORKLOADS), help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.inner:
        run_inner(args.inner, args.repeat)
    else:
        run_outer(args.repeat)


if __name__ == "__main__":
    main()

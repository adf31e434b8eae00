"""Compare the compiled and pure-Python knapsack kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload is run through every importable backend; results are checked
for equality before timings are reported.
"""

import argparse
import timeit

from zastava.kernels import backends
from zastava.rootdata import box, root_system

WORKLOADS = [
    # (label, kind, type, bound)
    ("kostant A2 box (20,20)", "graded", "A2", (20, 20)),
    ("kostant G2 box (12,18)", "graded", "G2", (12, 18)),
    ("kostant A3 box (6,6,6)", "graded", "A3", (6, 6, 6)),
    ("partitions A1 n=2000", "count", None, (2000,)),
    ("partitions A2 box (12,12)", "count", None, (12, 12)),
]


def _job(mod, kind, type_name, bound):
    if kind == "graded":
        rs = root_system(type_name)
        return lambda: mod.graded_knapsack(bound, rs.positive_coroots, sum(bound))
    parts = [v for v in box(bound) if any(v)]
    return lambda: mod.knapsack_count(bound, parts)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = backends()
    names = sorted(mods)
    print(f"{'workload':30s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, kind, type_name, bound in WORKLOADS:
        jobs = {n: _job(mods[n], kind, type_name, bound) for n in names}
        results = {n: jobs[n]() for n in names}
        if len({tuple(r) for r in results.values()}) != 1:
            raise SystemExit(f"{label}: backends disagree")
        best = {n: min(timeit.repeat(jobs[n], number=1, repeat=args.repeat)) for n in names}
        line = f"{label:30s}" + "".join(f"{best[n]:11.4f}s" for n in names)
        if "cython" in best:
            line += f"{best['python'] / best['cython']:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()

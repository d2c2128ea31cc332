"""Compiled vs pure-Python kernel timings, plus solver wall time at a few sizes.

    python3 benchmarks/bench_kernels.py [--repeats 3] [--seed 0]

Timings vary by machine; the comparison-count scaling (``veribench subset-sum
bench``) is the reproducible measurement.
"""
import argparse
import time

from veribench import _backend
from veribench.bench import bench_kernels, solution_free_instance
from veribench.subset_sum import SolveStats, solve_mitm, solve_naive


def solver_times(seed, sizes=(16, 20, 24, 28)):
    for n in sizes:
        inst = solution_free_instance(n, 10**9, seed)
        for name, solve in (("naive", solve_naive), ("mitm", solve_mitm)):
            if name == "naive" and n > 24:
                continue
            t0 = time.perf_counter()
            solve(inst, SolveStats())
            yield name, n, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"active backend: {_backend.BACKEND}")
    print(f"{'kernel':<22}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for row in bench_kernels(args.repeats, args.seed):
        comp = row.get("compiled_s")
        print(f"{row['kernel']:<22}{row['python_s']:>12.4f}"
              + (f"{comp:>12.4f}{row['speedup']:>9.1f}x" if comp is not None else f"{'n/a':>12}"))
    print()
    print(f"{'solver':<8}{'n':>4}{'wall s':>10}")
    for name, n, t in solver_times(args.seed):
        print(f"{name:<8}{n:>4}{t:>10.4f}")


if __name__ == "__main__":
    main()

"""Seeded benchmarks: solver scaling by comparison count, and compiled vs pure-Python kernels."""
from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import _backend
from .subset_sum import (SolveStats, SubsetSumInstance, _mask_order_sums, build_half_table,
                         random_instance, solve_mitm, solve_naive)


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    trial: int
    comparisons: int
    solvable: bool
    wall_time: float | None = None


def solution_free_instance(n: int, value_bound: int, seed: int) -> SubsetSumInstance:
    """First unsolvable instance in a seeded stream of random instances."""
    rng = random.Random(f"{seed}/{n}")
    while True:
        inst = random_instance(n, value_bound, False, rng.getrandbits(64))
        if solve_mitm(inst) is None:
            return inst


def bench_subset_sum(n_values, trials: int = 3, seed: int = 0, value_bound: int = 10**9,
                     naive_max_n: int = 20, timing: bool = False) -> list[BenchRecord]:
    """Run both solvers on identical solution-free instances.

    The naive solver is skipped above ``naive_max_n``. Records are ordered by
    (algorithm, n, trial).
    """
    solvers = {"naive": solve_naive, "mitm": solve_mitm}
    records = []
    for n in n_values:
        for trial in range(trials):
            inst = solution_free_instance(n, value_bound, seed * 1_000_003 + trial)
            for name, solve in solvers.items():
                if name == "naive" and n > naive_max_n:
                    continue
                stats = SolveStats()
                t0 = time.perf_counter()
                found = solve(inst, stats)
                wall = time.perf_counter() - t0 if timing else None
                records.append(BenchRecord(name, n, trial, stats.comparisons, found is not None, wall))
    records.sort(key=lambda r: (r.algorithm, r.n, r.trial))
    return records


def median_table(records) -> list[dict]:
    groups: dict[tuple[str, int], list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.algorithm, r.n), []).append(r)
    out = []
    for (alg, n), rs in sorted(groups.items()):
        row = {"algorithm": alg, "n": n, "trials": len(rs),
               "median_comparisons": statistics.median(r.comparisons for r in rs)}
        if all(r.wall_time is not None for r in rs):
            row["median_wall_s"] = statistics.median(r.wall_time for r in rs)
        out.append(row)
    return out


def fit_slope(records, algorithm: str, n_lo: int, n_hi: int) -> float:
    """Least-squares slope of log2(median comparisons) against n."""
    rows = [r for r in median_table(records) if r["algorithm"] == algorithm and n_lo <= r["n"] <= n_hi]
    if len(rows) < 2:
        raise ValueError("need at least two n values to fit a slope")
    x = np.array([r["n"] for r in rows], dtype=float)
    y = np.log2([r["median_comparisons"] for r in rows])
    return float(np.polyfit(x, y, 1)[0])


def _kernel_workloads(seed: int):
    inst = random_instance(20, 10**9, False, seed)
    lo = _mask_order_sums(inst.elements[:10], False)
    hi = _mask_order_sums(inst.elements[10:], False)
    big = random_instance(30, 10**9, False, seed)
    plus = build_half_table(big.elements[:15]).sums
    minus = np.ascontiguousarray((big.target - build_half_table(big.elements[15:]).sums)[::-1])
    from .number_theory import PrimeSieve
    sieve = PrimeSieve(10**6)
    return {
        "subset_naive_scan": lambda k: k.subset_naive_scan(lo, hi, inst.target, 10),
        "merge_scan": lambda k: k.merge_scan(plus, minus),
        "topswops_block": lambda k: k.topswops_block(8, 0),
        "collatz_sweep": lambda k: k.collatz_sweep(1, 200_000, 10**5),
        "mobius_linear_sieve": lambda k: k.mobius_linear_sieve(300_000),
        "goldbach_scan": lambda k: k.goldbach_scan(sieve.is_prime, sieve.primes, 4, 10**6),
    }


def bench_kernels(repeats: int = 3, seed: int = 0) -> list[dict]:
    """Best-of-``repeats`` wall time for each kernel on each available backend."""
    backends = _backend.available()
    rows = []
    for name, work in _kernel_workloads(seed).items():
        times = {}
        for label, mod in backends.items():
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                work(mod)
                best = min(best, time.perf_counter() - t0)
            times[label] = best
        row = {"kernel": name, "python_s": times["python"]}
        if "compiled" in times:
            row["compiled_s"] = times["compiled"]
            row["speedup"] = times["python"] / times["compiled"]
        rows.append(row)
    return rows

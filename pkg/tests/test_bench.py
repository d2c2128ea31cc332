import pytest

from veribench import bench
from veribench.subset_sum import solve_naive


def test_naive_count_at_16():
    recs = bench.bench_subset_sum([16], trials=1)
    naive = [r for r in recs if r.algorithm == "naive"]
    assert naive[0].comparisons == 65536 and not naive[0].solvable


def test_instances_are_solution_free_and_seeded():
    a = bench.solution_free_instance(10, 1000, 4)
    assert solve_naive(a) is None
    assert a == bench.solution_free_instance(10, 1000, 4)


def test_records_deterministic_without_timing():
    r1 = bench.bench_subset_sum(range(6, 9), trials=2, seed=5)
    assert r1 == bench.bench_subset_sum(range(6, 9), trials=2, seed=5)
    assert all(r.wall_time is None for r in r1)


def test_naive_skipped_above_cap():
    recs = bench.bench_subset_sum([8, 9], trials=1, naive_max_n=8)
    assert {(r.algorithm, r.n) for r in recs} == {("naive", 8), ("mitm", 8), ("mitm", 9)}


def test_slopes():
    recs = bench.bench_subset_sum(range(8, 19), trials=3)
    assert bench.fit_slope(recs, "naive", 8, 18) == pytest.approx(1.0, abs=0.01)
    assert bench.fit_slope(recs, "mitm", 8, 18) == pytest.approx(0.5, abs=0.1)


def test_fit_slope_needs_two_points():
    with pytest.raises(ValueError):
        bench.fit_slope(bench.bench_subset_sum([5], trials=1), "mitm", 5, 5)


def test_kernel_benchmark_rows():
    rows = bench.bench_kernels(repeats=1)
    assert {r["kernel"] for r in rows} >= {"merge_scan", "collatz_sweep"}
    assert all(r["python_s"] > 0 for r in rows)

"""Compiled and pure-Python kernels must agree exactly."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from veribench import _backend, _pykernels
from veribench.number_theory import PrimeSieve
from veribench.subset_sum import _mask_order_sums, build_half_table

compiled = _backend.compiled
needs_ext = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


def test_backend_selection_reports_a_known_name():
    assert _backend.BACKEND in ("compiled", "python")
    assert "python" in _backend.available()


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-50, 50), max_size=12), st.integers(-200, 200))
def test_naive_scan_agrees(elements, target):
    k = (len(elements) + 1) // 2
    lo = _mask_order_sums(elements[:k], False)
    hi = _mask_order_sums(elements[k:], False)
    assert compiled.subset_naive_scan(lo, hi, target, k) == _pykernels.subset_naive_scan(lo, hi, target, k)


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), max_size=10), st.integers(-100, 100))
def test_merge_scan_agrees(elements, target):
    h = (len(elements) + 1) // 2
    plus = build_half_table(elements[:h]).sums
    minus = np.ascontiguousarray((target - build_half_table(elements[h:]).sums)[::-1])
    assert compiled.merge_scan(plus, minus) == _pykernels.merge_scan(plus, minus)


@needs_ext
@pytest.mark.parametrize("n,first", [(n, f) for n in range(1, 8) for f in (0, 1, 2) if f <= n])
def test_topswops_block_agrees(n, first):
    assert compiled.topswops_block(n, first) == _pykernels.topswops_block(n, first)


@needs_ext
@pytest.mark.parametrize("lo,hi,budget", [(1, 5000, 10**5), (1, 200, 3), (10**6, 10**6 + 500, 10**5)])
def test_collatz_sweep_agrees(lo, hi, budget):
    a = compiled.collatz_sweep(lo, hi, budget)
    b = _pykernels.collatz_sweep(lo, hi, budget)
    assert (a[0], int(a[1]), list(a[3])) == (b[0], b[1], b[3])


@needs_ext
def test_collatz_sweep_hands_back_overflowing_starts():
    big = 2**64 - 1
    _, _, overflow, exhausted = compiled.collatz_sweep(big - 2, big, 10**4)
    assert set(overflow) | set(exhausted) >= {big - 2, big}


@needs_ext
@pytest.mark.parametrize("N", [1, 2, 3, 30, 1000, 65537])
def test_mobius_sieve_agrees(N):
    mu_c, p_c = compiled.mobius_linear_sieve(N)
    mu_p, p_p = _pykernels.mobius_linear_sieve(N)
    np.testing.assert_array_equal(mu_c, mu_p)
    np.testing.assert_array_equal(p_c, p_p)


@needs_ext
@pytest.mark.parametrize("lo,hi", [(4, 4), (4, 5000), (1000, 20000)])
def test_goldbach_scan_agrees(lo, hi):
    s = PrimeSieve(hi)
    np.testing.assert_array_equal(compiled.goldbach_scan(s.is_prime, s.primes, lo, hi),
                                  _pykernels.goldbach_scan(s.is_prime, s.primes, lo, hi))

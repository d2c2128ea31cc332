# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.

Every function here has a behaviour-identical twin in ``_pykernels``; the
test-suite checks the two against each other.
"""
import numpy as np

from libc.stdint cimport int64_t, uint64_t, int8_t, uint8_t
from libc.stdlib cimport malloc, free

# (3v + 1) must fit in 64 bits
cdef uint64_t COLLATZ_ODD_LIMIT = 6148914691236517204ULL


def subset_naive_scan(const int64_t[::1] lo_sums, const int64_t[::1] hi_sums,
                      int64_t target, int lo_bits):
    cdef Py_ssize_t i, j
    cdef Py_ssize_t nlo = lo_sums.shape[0]
    cdef Py_ssize_t nhi = hi_sums.shape[0]
    cdef int64_t need
    cdef long long comps = 0
    for i in range(nhi):
        need = target - hi_sums[i]
        for j in range(nlo):
            comps += 1
            if lo_sums[j] == need:
                return (<long long> i << lo_bits) | j, comps
    return -1, comps


def merge_scan(const int64_t[::1] plus, const int64_t[::1] minus):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = plus.shape[0], nb = minus.shape[0]
    cdef long long comps = 0
    while i < na and j < nb:
        comps += 1
        if plus[i] == minus[j]:
            return i, j, comps
        elif plus[i] < minus[j]:
            i += 1
        else:
            j += 1
    return -1, -1, comps


cdef inline int _next_perm(int* a, int start, int n) noexcept nogil:
    cdef int i = n - 2, j, t
    while i >= start and a[i] >= a[i + 1]:
        i -= 1
    if i < start:
        return 0
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return 1


cdef inline int _run_steps(int* d) noexcept nogil:
    cdef int steps = 0, k, lo, hi, t
    while d[0] != 1:
        k = d[0]
        lo = 0
        hi = k - 1
        while lo < hi:
            t = d[lo]; d[lo] = d[hi]; d[hi] = t
            lo += 1
            hi -= 1
        steps += 1
    return steps


def topswops_block(int n, int first):
    """Max steps over permutations of 1..n whose top card is ``first``.

    ``first == 0`` scans every permutation. Returns ``(steps, witness)`` with
    the lexicographically least maximiser.
    """
    cdef int* perm = <int*> malloc(n * sizeof(int))
    cdef int* work = <int*> malloc(n * sizeof(int))
    cdef int* best = <int*> malloc(n * sizeof(int))
    cdef int i, c, start, steps, best_steps = -1
    if perm == NULL or work == NULL or best == NULL:
        free(perm); free(work); free(best)
        raise MemoryError()
    try:
        if first == 0:
            start = 0
            for i in range(n):
                perm[i] = i + 1
        else:
            start = 1
            perm[0] = first
            c = 0
            for i in range(1, n + 1):
                if i != first:
                    c += 1
                    perm[c] = i
        with nogil:
            while True:
                for i in range(n):
                    work[i] = perm[i]
                steps = _run_steps(work)
                if steps > best_steps:
                    best_steps = steps
                    for i in range(n):
                        best[i] = perm[i]
                if not _next_perm(perm, start, n):
                    break
        return best_steps, tuple([best[i] for i in range(n)])
    finally:
        free(perm); free(work); free(best)


def collatz_sweep(uint64_t lo, uint64_t hi, long long budget):
    """Shortcut-map sweep of [lo, hi], stopping each orbit once it drops below
    its start. Starts whose orbit would overflow 64 bits are handed back.
    """
    cdef uint64_t n, v, peak, max_exc = 0
    cdef long long steps, max_steps = 0
    cdef int status
    overflow = []
    exhausted = []
    n = lo
    while n <= hi:
        v = n
        peak = n
        steps = 0
        status = 0
        while v >= n and v != 1:
            if steps == budget:
                status = 1
                break
            if v & 1:
                if v > COLLATZ_ODD_LIMIT:
                    status = 2
                    break
                v = (3 * v + 1) >> 1
            else:
                v >>= 1
            steps += 1
            if v > peak:
                peak = v
        if status == 1:
            exhausted.append(n)
        elif status == 2:
            overflow.append(n)
        else:
            if steps > max_steps:
                max_steps = steps
            if peak > max_exc:
                max_exc = peak
        if n == hi:
            break
        n += 1
    return max_steps, max_exc, overflow, exhausted


def mobius_linear_sieve(Py_ssize_t N):
    mu_arr = np.zeros(N + 1, dtype=np.int8)
    comp_arr = np.zeros(N + 1, dtype=np.uint8)
    primes_arr = np.empty(N // 2 + 2, dtype=np.int64)
    cdef int8_t[::1] mu = mu_arr
    cdef uint8_t[::1] comp = comp_arr
    cdef int64_t[::1] primes = primes_arr
    cdef Py_ssize_t i, j, count = 0
    cdef int64_t p, ip
    if N >= 1:
        mu[1] = 1
    with nogil:
        for i in range(2, N + 1):
            if not comp[i]:
                primes[count] = i
                count += 1
                mu[i] = -1
            for j in range(count):
                p = primes[j]
                ip = i * p
                if ip > N:
                    break
                comp[ip] = 1
                if i % p == 0:
                    mu[ip] = 0
                    break
                mu[ip] = -mu[i]
    return mu_arr, primes_arr[:count].copy()


def goldbach_scan(const uint8_t[::1] is_prime, const int64_t[::1] primes,
                  int64_t lo, int64_t hi):
    """Least prime p with n - p prime, for each even n in [lo, hi] (lo even)."""
    cdef int64_t n, p, half
    cdef Py_ssize_t k, idx = 0, np_ = primes.shape[0]
    count = (hi - lo) // 2 + 1 if hi >= lo else 0
    out_arr = np.zeros(count, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    with nogil:
        n = lo
        while n <= hi:
            half = n // 2
            for k in range(np_):
                p = primes[k]
                if p > half:
                    break
                if is_prime[n - p]:
                    out[idx] = p
                    break
            idx += 1
            n += 2
    return out_arr

"""Pure-Python/numpy implementations of the compiled kernels.

Signatures and results match ``_kernels`` exactly, including comparison
counters, so either can back the public modules.
"""
from __future__ import annotations

from itertools import permutations

import numpy as np


def subset_naive_scan(lo_sums, hi_sums, target, lo_bits):
    lo = np.asarray(lo_sums)
    comps = 0
    nlo = len(lo)
    for i, hs in enumerate(np.asarray(hi_sums).tolist()):
        hits = np.flatnonzero(lo == target - hs)
        if hits.size:
            j = int(hits[0])
            return (i << lo_bits) | j, comps + j + 1
        comps += nlo
    return -1, comps


def merge_scan(plus, minus):
    a = plus.tolist() if isinstance(plus, np.ndarray) else list(plus)
    b = minus.tolist() if isinstance(minus, np.ndarray) else list(minus)
    i = j = comps = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        comps += 1
        x, y = a[i], b[j]
        if x == y:
            return i, j, comps
        if x < y:
            i += 1
        else:
            j += 1
    return -1, -1, comps


def _run_steps(deck):
    steps = 0
    k = deck[0]
    while k != 1:
        deck[:k] = deck[k - 1::-1]
        steps += 1
        k = deck[0]
    return steps


def topswops_block(n, first):
    if first == 0:
        head, rest = [], list(range(1, n + 1))
    else:
        head, rest = [first], [c for c in range(1, n + 1) if c != first]
    best_steps, best = -1, None
    # itertools.permutations yields lexicographic order for sorted input
    for tail in permutations(rest):
        deck = head + list(tail)
        steps = _run_steps(deck[:])
        if steps > best_steps:
            best_steps, best = steps, deck
    return best_steps, tuple(best)


def collatz_sweep(lo, hi, budget):
    max_steps = max_exc = 0
    exhausted = []
    for n in range(lo, hi + 1):
        v = peak = n
        steps = 0
        ok = True
        while v >= n and v != 1:
            if steps == budget:
                ok = False
                break
            v = (3 * v + 1) >> 1 if v & 1 else v >> 1
            steps += 1
            if v > peak:
                peak = v
        if not ok:
            exhausted.append(n)
            continue
        if steps > max_steps:
            max_steps = steps
        if peak > max_exc:
            max_exc = peak
    return max_steps, max_exc, [], exhausted


def mobius_linear_sieve(N):
    mu = [0] * (N + 1)
    comp = bytearray(N + 1)
    primes = []
    if N >= 1:
        mu[1] = 1
    for i in range(2, N + 1):
        if not comp[i]:
            primes.append(i)
            mu[i] = -1
        mi = mu[i]
        for p in primes:
            ip = i * p
            if ip > N:
                break
            comp[ip] = 1
            if i % p == 0:
                break
            mu[ip] = -mi
    return np.array(mu, dtype=np.int8), np.array(primes, dtype=np.int64)


def goldbach_scan(is_prime, primes, lo, hi):
    if hi < lo:
        return np.zeros(0, dtype=np.int64)
    evens = np.arange(lo, hi + 1, 2, dtype=np.int64)
    out = np.zeros(len(evens), dtype=np.int64)
    flags = np.asarray(is_prime, dtype=bool)
    pending = np.arange(len(evens))
    # vectorised over n, sequential over p: least p wins
    for p in np.asarray(primes).tolist():
        if not pending.size:
            break
        ns = evens[pending]
        live = ns >= 2 * p
        if not live.any():
            break
        pending, ns = pending[live], ns[live]
        hit = flags[ns - p]
        out[pending[hit]] = p
        pending = pending[~hit]
    return out

"""Moebius/Mertens tables, prime counting against Li, and Goldbach/Chen/twin checks."""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import integrate

from . import _backend
from .errors import ConvergenceError, MemoryBoundError

MAX_TABLE = 2 * 10**9


def _check_bound(N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > MAX_TABLE:
        raise MemoryBoundError(f"table up to {N} exceeds {MAX_TABLE}")


class MobiusTable:
    """mu(k) for 1 <= k <= N, indexable by k."""

    def __init__(self, values: np.ndarray, primes: np.ndarray | None = None):
        self.values = values
        self.primes = primes

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k):
        return self.values[k]


class MertensSeries:
    def __init__(self, values: np.ndarray):
        self.values = values

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def to_csv(self, stride: int = 1) -> str:
        rows = ["n,M(n)"]
        rows += [f"{n},{self.values[n]}" for n in range(1, self.N + 1, stride)]
        return "\n".join(rows) + "\n"


class PrimeSieve:
    def __init__(self, N: int):
        _check_bound(N)
        flags = np.ones(N + 1, dtype=np.uint8)
        flags[:2] = 0
        for p in range(2, math.isqrt(N) + 1):
            if flags[p]:
                flags[p * p::p] = 0
        self.N = N
        self.is_prime = flags
        self.primes = np.flatnonzero(flags).astype(np.int64)

    def __contains__(self, n) -> bool:
        return 0 <= n <= self.N and bool(self.is_prime[n])

    def pi(self, n: int) -> int:
        return int(np.searchsorted(self.primes, n, side="right"))


def mobius_sieve(N: int) -> MobiusTable:
    """Linear sieve (each composite crossed out exactly once by its least prime)."""
    _check_bound(N)
    mu, primes = _backend.kernels.mobius_linear_sieve(N)
    return MobiusTable(mu, primes)


def mertens(N: int, table: MobiusTable | None = None) -> MertensSeries:
    table = table if table is not None else mobius_sieve(N)
    m = np.cumsum(table.values[: N + 1], dtype=np.int64)
    return MertensSeries(m)


def mertens_bound_check(N: int, c: float = 1.0, series: MertensSeries | None = None) -> list[int]:
    """All n in [2, N] with |M(n)| > c * sqrt(n) * ln(n)."""
    if N < 2:
        raise ValueError("N must be >= 2")
    series = series if series is not None else mertens(N)
    n = np.arange(2, N + 1)
    bound = c * np.sqrt(n) * np.log(n)
    bad = np.abs(series.values[2 : N + 1]) > bound
    return [int(k) for k in n[bad]]


def li(n: float, tol: float = 1e-6) -> float:
    """Integral of 1/ln x from 2 to n, by adaptive quadrature."""
    if n < 2:
        raise ValueError("Li is defined here for n >= 2")
    if n == 2:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.quad(lambda x: 1.0 / math.log(x), 2.0, float(n),
                                      epsabs=tol, epsrel=0.0, limit=500)
        except integrate.IntegrationWarning as exc:
            raise ConvergenceError(f"Li({n}) quadrature did not converge: {exc}") from exc
    if err > tol:
        raise ConvergenceError(f"Li({n}) error estimate {err:g} exceeds {tol:g}")
    return val


@dataclass(frozen=True)
class PiRow:
    n: int
    pi: int
    li: float
    err: float


def prime_count_vs_li(N: int, checkpoints, sieve: PrimeSieve | None = None) -> list[PiRow]:
    checkpoints = sorted(int(c) for c in checkpoints)
    if checkpoints and (checkpoints[-1] > N or checkpoints[0] < 2):
        raise ValueError("checkpoints must lie in [2, N]")
    sieve = sieve if sieve is not None else PrimeSieve(N)
    rows = []
    for n in checkpoints:
        p = sieve.pi(n)
        L = li(n)
        rows.append(PiRow(n, p, L, p - L))
    return rows


def segmented_prime_count(N: int, segment: int = 1 << 16) -> int:
    """pi(N) by a segmented Eratosthenes sieve on bytearrays (no numpy)."""
    if N < 2:
        return 0
    root = math.isqrt(N)
    small = bytearray([1]) * (root + 1)
    small[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(root) + 1):
        if small[p]:
            small[p * p::p] = bytes(len(range(p * p, root + 1, p)))
    base = [p for p in range(2, root + 1) if small[p]]
    count = 0
    for lo in range(2, N + 1, segment):
        hi = min(lo + segment - 1, N)
        seg = bytearray([1]) * (hi - lo + 1)
        for p in base:
            if p * p > hi:
                break
            start = max(p * p, (lo + p - 1) // p * p)
            seg[start - lo::p] = bytes(len(range(start, hi + 1, p)))
        count += seg.count(1)
    return count


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def mobius_trial(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    sign = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            sign = -sign
        f += 1
    return -sign if n > 1 else sign


@dataclass(frozen=True)
class GoldbachWitness:
    even_n: int
    p: int
    q: int


@dataclass
class GoldbachReport:
    lo: int
    hi: int
    checked: int
    counterexamples: list[int] = field(default_factory=list)
    max_least_p: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _check_even(n: int) -> None:
    if n < 4 or n % 2:
        raise ValueError("need an even number >= 4")


def goldbach_witness(even_n: int, sieve: PrimeSieve | None = None) -> GoldbachWitness | None:
    """Witness with the least p, or None (a counterexample)."""
    _check_even(even_n)
    sieve = sieve if sieve is not None and sieve.N >= even_n else PrimeSieve(even_n)
    for p in sieve.primes:
        p = int(p)
        if p > even_n // 2:
            break
        if sieve.is_prime[even_n - p]:
            return GoldbachWitness(even_n, p, even_n - p)
    return None


def goldbach_least_p(lo: int, hi: int, sieve: PrimeSieve | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Even numbers in [lo, hi] (lo >= 4) and their least Goldbach prime (0 = none)."""
    lo = max(4, lo + (lo & 1))
    sieve = sieve if sieve is not None and sieve.N >= hi else PrimeSieve(max(hi, 4))
    ps = _backend.kernels.goldbach_scan(sieve.is_prime, sieve.primes, lo, hi)
    evens = np.arange(lo, lo + 2 * len(ps), 2, dtype=np.int64)
    return evens, np.asarray(ps)


def goldbach_verify_range(lo: int, hi: int, sieve: PrimeSieve | None = None) -> GoldbachReport:
    evens, ps = goldbach_least_p(lo, hi, sieve)
    bad = evens[ps == 0]
    return GoldbachReport(lo, hi, int(len(evens)), [int(n) for n in bad],
                          int(ps.max()) if len(ps) else 0)


@dataclass(frozen=True)
class ChenWitness:
    even_n: int
    p: int
    q: int
    r: int | None = None  # set for the semiprime form p + q*r

    @property
    def second(self) -> int:
        return self.q if self.r is None else self.q * self.r


def _semiprime_split(m: int, sieve: PrimeSieve) -> tuple[int, int] | None:
    for q in sieve.primes:
        q = int(q)
        if q * q > m:
            break
        if m % q == 0:
            r = m // q
            return (q, r) if r in sieve else None
    return None


def chen_witness(even_n: int, sieve: PrimeSieve | None = None) -> ChenWitness | None:
    """Prefer p + q with q prime; otherwise least p with n - p = q*r."""
    _check_even(even_n)
    sieve = sieve if sieve is not None and sieve.N >= even_n else PrimeSieve(even_n)
    g = goldbach_witness(even_n, sieve)
    if g is not None:
        return ChenWitness(even_n, g.p, g.q)
    for p in sieve.primes:
        p = int(p)
        if p >= even_n - 3:
            break
        split = _semiprime_split(even_n - p, sieve)
        if split is not None:
            return ChenWitness(even_n, p, *split)
    return None


def twin_primes_up_to(N: int, sieve: PrimeSieve | None = None) -> list[tuple[int, int]]:
    if N < 3:
        raise ValueError("N must be >= 3")
    sieve = sieve if sieve is not None and sieve.N >= N else PrimeSieve(N)
    ps = sieve.primes[sieve.primes <= N]
    gaps = np.flatnonzero(np.diff(ps) == 2)
    return [(int(ps[i]), int(ps[i] + 2)) for i in gaps]

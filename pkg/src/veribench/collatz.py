"""Collatz engine on the shortcut map T(n) = n/2 (even), (3n+1)/2 (odd)."""
from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import _backend

_U64_MAX = 2**64 - 1


def step(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (3 * n + 1) // 2 if n & 1 else n // 2


@dataclass(frozen=True)
class Trajectory:
    start: int
    values: tuple[int, ...]
    halted: bool

    @property
    def steps(self) -> int:
        return len(self.values) - 1

    def to_csv(self) -> str:
        rows = ["step,value,parity"]
        rows += [f"{k},{v},{v & 1}" for k, v in enumerate(self.values)]
        return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class ParityVector:
    bits: tuple[int, ...]

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class ResidueClass:
    residue: int
    modulus: int

    def __contains__(self, n: int) -> bool:
        return n % self.modulus == self.residue


@dataclass
class RangeReport:
    lo: int
    hi: int
    all_halted: bool
    max_steps_seen: int
    max_excursion: int
    unhalted: list[int] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def trajectory(n: int, max_steps: int = 10**6) -> Trajectory:
    if n < 1:
        raise ValueError("n must be positive")
    values = [n]
    v = n
    while v != 1 and len(values) <= max_steps:
        v = step(v)
        values.append(v)
    return Trajectory(n, tuple(values), v == 1)


def parity_vector(n: int, m: int) -> ParityVector:
    """First m parities of the orbit, continuing round the 1 -> 2 -> 1 cycle."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    bits = []
    v = n
    for _ in range(m):
        bits.append(v & 1)
        v = step(v)
    return ParityVector(tuple(bits))


def realize_parity_prefix(bits) -> ResidueClass:
    """Residue r mod 2^m whose members all start with the given parities.

    Built one bit at a time: with v = T^k(r) and a = number of odd steps so
    far, T^k(r + 2^k) = v + 3^a, which flips the parity of the k-th iterate.
    """
    bits = tuple(getattr(bits, "bits", bits))
    if not bits:
        raise ValueError("parity prefix must be non-empty")
    r, v, odd = 0, 0, 0
    for k, want in enumerate(bits):
        if (v & 1) != want:
            r += 1 << k
            v += 3**odd
        if v & 1:
            v = (3 * v + 1) // 2
            odd += 1
        else:
            v //= 2
    return ResidueClass(r, 1 << len(bits))


def _sweep_bigint(n: int, budget: int):
    """Python-integer fallback for starts whose orbit leaves 64 bits."""
    v = peak = n
    steps = 0
    while v >= n and v != 1:
        if steps == budget:
            return None
        v = step(v)
        steps += 1
        peak = max(peak, v)
    return steps, peak


def _verify_chunk(args) -> RangeReport:
    lo, hi, budget = args
    kern = _backend.kernels if hi <= _U64_MAX else _backend.python
    max_steps, max_exc, overflow, unhalted = kern.collatz_sweep(lo, hi, budget)
    max_exc = int(max_exc)
    unhalted = [int(n) for n in unhalted]
    for n in overflow:
        res = _sweep_bigint(int(n), budget)
        if res is None:
            unhalted.append(int(n))
        else:
            max_steps, max_exc = max(max_steps, res[0]), max(max_exc, res[1])
    unhalted.sort()
    return RangeReport(lo, hi, not unhalted, int(max_steps), max_exc, unhalted)


def merge_reports(reports) -> RangeReport:
    reports = list(reports)
    return RangeReport(
        min(r.lo for r in reports),
        max(r.hi for r in reports),
        all(r.all_halted for r in reports),
        max(r.max_steps_seen for r in reports),
        max(r.max_excursion for r in reports),
        sorted(n for r in reports for n in r.unhalted),
    )


def verify_range(lo: int, hi: int, step_budget: int = 10**5, workers: int = 1) -> RangeReport:
    """Check that every start in [lo, hi] falls below itself (or reaches 1).

    Values below the start are covered by induction over the sweep, values
    below ``lo`` by the assumed verified prefix. ``max_steps_seen`` is
    therefore the largest stopping time, and ``max_excursion`` the largest
    value seen before stopping. Starts that exhaust the budget are listed in
    ``unhalted``.
    """
    if not 1 <= lo <= hi:
        raise ValueError("need 1 <= lo <= hi")
    if workers <= 1:
        return _verify_chunk((lo, hi, step_budget))
    edges = [lo + (hi - lo + 1) * k // workers for k in range(workers + 1)]
    chunks = [(a, b - 1, step_budget) for a, b in zip(edges, edges[1:]) if b > a]
    with ProcessPoolExecutor(workers) as pool:
        return merge_reports(pool.map(_verify_chunk, chunks))


def log_factors(n: int, count: int) -> list[float]:
    out = []
    for _ in range(count):
        nxt = step(n)
        out.append(math.log(nxt / n))
        n = nxt
    return out


def drift_from_starts(starts, bit_width: int) -> float:
    """Pooled mean of log(n_{k+1}/n_k) over steps taken while n > 2^(bit_width/2)."""
    floor = 1 << (bit_width // 2)
    total = 0.0
    count = 0
    for n in starts:
        while n > floor:
            nxt = (3 * n + 1) >> 1 if n & 1 else n >> 1
            total += math.log(nxt / n)
            count += 1
            n = nxt
    if not count:
        raise ValueError("no start exceeded the drift floor")
    return total / count


def drift_statistic(sample_count: int, bit_width: int = 64, seed: int = 0) -> float:
    if bit_width < 16:
        raise ValueError("bit_width must be >= 16")
    rng = random.Random(seed)
    top = 1 << (bit_width - 1)
    starts = [rng.getrandbits(bit_width) | top for _ in range(sample_count)]
    return drift_from_starts(starts, bit_width)

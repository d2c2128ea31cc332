"""Exact SUBSET-SUM solvers: exhaustive enumeration and meet-in-the-middle.

Both solvers take an optional :class:`SolveStats` and add the number of
element comparisons they perform to it. The naive solver compares one subset
sum with the target per subset; the meet-in-the-middle solver counts one
comparison per step of its two-pointer merge (sorting is not counted).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _backend, _pykernels
from .errors import SizeExceededError

NAIVE_MAX_N = 30
MITM_MAX_N = 63
ELEMENT_BOUND = 2**60
TARGET_BOUND = 2**62
_INT64_SAFE = 2**63 - 1


@dataclass(frozen=True)
class SubsetSumInstance:
    elements: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(a) for a in self.elements))
        object.__setattr__(self, "target", int(self.target))
        if len(self.elements) > MITM_MAX_N:
            raise SizeExceededError(f"n={len(self.elements)} exceeds {MITM_MAX_N}")
        if any(abs(a) > ELEMENT_BOUND for a in self.elements):
            raise ValueError("element magnitude exceeds 2**60")
        if abs(self.target) > TARGET_BOUND:
            raise ValueError("target magnitude exceeds 2**62")

    @property
    def n(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SubsetWitness:
    mask: int

    @property
    def indices(self) -> list[int]:
        return [i for i in range(self.mask.bit_length()) if self.mask >> i & 1]

    def total(self, elements) -> int:
        return sum(elements[i] for i in self.indices)

    def check(self, instance: SubsetSumInstance) -> bool:
        if self.mask < 0 or self.mask >> instance.n:
            return False
        return self.total(instance.elements) == instance.target


@dataclass
class SolveStats:
    comparisons: int = 0


@dataclass
class HalfSumTable:
    """All subset sums of one half, sorted ascending by sum.

    ``masks`` are local to the half (bit 0 is the half's first element).
    """

    sums: np.ndarray
    masks: np.ndarray

    def __len__(self):
        return len(self.sums)

    def is_sorted(self) -> bool:
        s = self.sums
        return all(s[i] <= s[i + 1] for i in range(len(s) - 1)) if s.dtype == object \
            else bool(np.all(s[:-1] <= s[1:]))


def _fits_int64(elements, target) -> bool:
    return sum(abs(a) for a in elements) + abs(target) < _INT64_SAFE


def _mask_order_sums(elements, wide: bool) -> np.ndarray:
    """Subset sums indexed by mask (entry m sums the elements at set bits of m)."""
    if wide:
        sums = [0]
        for a in elements:
            sums = sums + [s + a for s in sums]
        return np.array(sums, dtype=object)
    sums = np.zeros(1, dtype=np.int64)
    for a in elements:
        sums = np.concatenate([sums, sums + a])
    return sums


def build_half_table(elements, wide: bool = False) -> HalfSumTable:
    sums = _mask_order_sums(elements, wide)
    masks = np.arange(len(sums), dtype=np.int64)
    order = np.argsort(sums, kind="stable")
    return HalfSumTable(np.ascontiguousarray(sums[order]), masks[order])


def enumerate_subset_sums(elements) -> list[tuple[int, int]]:
    elements = [int(a) for a in elements]
    if len(elements) > NAIVE_MAX_N:
        raise SizeExceededError(f"enumeration limited to n <= {NAIVE_MAX_N}")
    sums = [0]
    for a in elements:
        sums = sums + [s + a for s in sums]
    return [(s, m) for m, s in enumerate(sums)]


def solve_naive(instance: SubsetSumInstance, stats: SolveStats | None = None) -> SubsetWitness | None:
    """Scan subsets in increasing mask order; the lowest solving mask wins."""
    n = instance.n
    if n > NAIVE_MAX_N:
        raise SizeExceededError(f"naive solver limited to n <= {NAIVE_MAX_N}")
    k = (n + 1) // 2
    wide = not _fits_int64(instance.elements, instance.target)
    lo = _mask_order_sums(instance.elements[:k], wide)
    hi = _mask_order_sums(instance.elements[k:], wide)
    kern = _pykernels if wide else _backend.kernels
    mask, comps = kern.subset_naive_scan(lo, hi, instance.target, k)
    if stats is not None:
        stats.comparisons += comps
    return None if mask < 0 else SubsetWitness(int(mask))


def _run_start(values, idx):
    v = values[idx]
    while idx > 0 and values[idx - 1] == v:
        idx -= 1
    return idx


def _run_min_mask(values, masks, idx):
    v = values[idx]
    best = int(masks[idx])
    k = idx + 1
    while k < len(values) and values[k] == v:
        best = min(best, int(masks[k]))
        k += 1
    return best


def solve_mitm(instance: SubsetSumInstance, stats: SolveStats | None = None) -> SubsetWitness | None:
    """Meet-in-the-middle: merge sorted S+ against sorted b - S-.

    The first ceil(n/2) elements form the "plus" half. On a match the equal
    runs on both sides are scanned and the numerically least combined mask is
    returned.
    """
    n = instance.n
    if n > MITM_MAX_N:
        raise SizeExceededError(f"meet-in-the-middle limited to n <= {MITM_MAX_N}")
    h = (n + 1) // 2
    wide = not _fits_int64(instance.elements, instance.target)
    plus = build_half_table(instance.elements[:h], wide)
    minus = build_half_table(instance.elements[h:], wide)
    # b - S- ascending is S- descending
    shifted = np.ascontiguousarray((instance.target - minus.sums)[::-1])
    shifted_masks = minus.masks[::-1]
    kern = _pykernels if wide else _backend.kernels
    i, j, comps = kern.merge_scan(plus.sums, shifted)
    if stats is not None:
        stats.comparisons += comps
    if i < 0:
        return None
    i = _run_start(plus.sums, i)
    j = _run_start(shifted, j)
    low = _run_min_mask(plus.sums, plus.masks, i)
    high = _run_min_mask(shifted, shifted_masks, j)
    return SubsetWitness(low | (high << h))


def random_instance(n: int, value_bound: int, force_solvable: bool, seed: int) -> SubsetSumInstance:
    if not 0 <= n <= MITM_MAX_N:
        raise SizeExceededError(f"n must be in [0, {MITM_MAX_N}]")
    if value_bound < 1:
        raise ValueError("value_bound must be >= 1")
    rng = random.Random(seed)
    elements = [rng.randint(-value_bound, value_bound) for _ in range(n)]
    if force_solvable:
        mask = rng.getrandbits(n) if n else 0
        target = sum(a for i, a in enumerate(elements) if mask >> i & 1)
    else:
        target = rng.randint(-n * value_bound, n * value_bound)
    return SubsetSumInstance(tuple(elements), target)


def parse_instance(text: str) -> SubsetSumInstance:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("instance needs a header line 'n b'")
    n, b = int(tokens[0]), int(tokens[1])
    values = [int(t) for t in tokens[2:]]
    if len(values) != n:
        raise ValueError(f"header declares {n} elements, found {len(values)}")
    return SubsetSumInstance(tuple(values), b)


def read_instance(path) -> SubsetSumInstance:
    return parse_instance(Path(path).read_text())


def format_instance(instance: SubsetSumInstance) -> str:
    body = " ".join(str(a) for a in instance.elements)
    return f"{instance.n} {instance.target}\n{body}\n"


def format_witness(witness: SubsetWitness | None) -> str:
    if witness is None:
        return "NONE"
    return " ".join(str(i) for i in witness.indices)

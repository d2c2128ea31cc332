"""Reverse-card-shuffling (topswops): flip the top k cards while the top card k > 1."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _backend
from .errors import HaltedDeckError, SizeExceededError

MAX_N = 11
DEFAULT_MAX_N = 10


@dataclass(frozen=True)
class Deck:
    cards: tuple[int, ...]

    def __post_init__(self):
        cards = tuple(int(c) for c in self.cards)
        if sorted(cards) != list(range(1, len(cards) + 1)):
            raise ValueError(f"not a permutation of 1..{len(cards)}: {cards}")
        object.__setattr__(self, "cards", cards)

    @classmethod
    def parse(cls, text: str) -> "Deck":
        text = text.strip()
        if "," in text or " " in text:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        return cls(tuple(int(ch) for ch in text))

    @property
    def top(self) -> int:
        return self.cards[0]

    def __str__(self):
        sep = "" if len(self.cards) < 10 else " "
        return sep.join(map(str, self.cards))


@dataclass(frozen=True)
class RunResult:
    steps: int
    final: Deck


def shuffle_step(deck: Deck) -> Deck:
    k = deck.top
    if k == 1:
        raise HaltedDeckError("top card is 1")
    c = deck.cards
    return Deck(c[k - 1::-1] + c[k:])


def run(deck: Deck, trace: list | None = None) -> RunResult:
    steps = 0
    if trace is not None:
        trace.append(deck)
    while deck.top != 1:
        deck = shuffle_step(deck)
        steps += 1
        if trace is not None:
            trace.append(deck)
    return RunResult(steps, deck)


def _block(args):
    n, first = args
    return _backend.kernels.topswops_block(n, first)


def max_iterations(n: int, workers: int = 1, allow_slow: bool = False) -> tuple[int, Deck]:
    """Exact maximum step count over all n! decks, with the lexicographically
    least deck attaining it."""
    if n < 1:
        raise ValueError("n must be >= 1")
    limit = MAX_N if allow_slow else DEFAULT_MAX_N
    if n > limit:
        raise SizeExceededError(f"n={n} exceeds {limit}" + ("" if allow_slow else " (n=11 needs allow_slow)"))
    blocks = [(n, first) for first in range(1, n + 1)]
    if workers > 1 and n > 6:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_block, blocks))
    else:
        results = [_block(b) for b in blocks]
    # blocks are in first-card order, so strict > keeps the least witness
    best_steps, best = -1, None
    for steps, witness in results:
        if steps > best_steps:
            best_steps, best = steps, witness
    return best_steps, Deck(best)


def table(max_n: int, workers: int = 1, allow_slow: bool = False) -> list[tuple[int, int, Deck]]:
    return [(n, *max_iterations(n, workers, allow_slow)) for n in range(1, max_n + 1)]

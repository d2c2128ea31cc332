import itertools

import pytest
from hypothesis import given, strategies as st

from veribench.errors import HaltedDeckError, SizeExceededError
from veribench.topswops import Deck, max_iterations, run, shuffle_step, table


def D(s):
    return Deck.parse(s)


@pytest.mark.parametrize("before,after", [("5732416", "4237516"), ("21", "12"), ("321", "123")])
def test_shuffle_step(before, after):
    assert shuffle_step(D(before)) == D(after)


def test_shuffle_step_halted():
    with pytest.raises(HaltedDeckError):
        shuffle_step(D("123"))


def test_run_worked_example():
    trace = []
    res = run(D("5732416"), trace)
    assert res.steps == 7 and res.final == D("1423567")
    assert [str(d) for d in trace] == ["5732416", "4237516", "7324516", "6154237",
                                       "3245167", "4235167", "5324167", "1423567"]


@pytest.mark.parametrize("deck,steps", [("1234567", 0), ("213", 1)])
def test_run_simple(deck, steps):
    assert run(D(deck)).steps == steps


def test_deck_validation():
    with pytest.raises(ValueError):
        Deck((1, 1, 2))


def test_max_iterations_n1():
    assert max_iterations(1) == (0, Deck((1,)))


def test_max_iterations_n3_by_hand():
    steps = {p: run(Deck(p)).steps for p in itertools.permutations((1, 2, 3))}
    assert max(steps.values()) == 2
    assert max_iterations(3) == (2, D("231"))


def test_max_iterations_n7(each_backend):
    assert max_iterations(7)[0] == 16


def test_witness_is_lexicographically_least():
    for n in range(1, 7):
        best, witness = max_iterations(n)
        perms = sorted(itertools.permutations(range(1, n + 1)))
        first = next(p for p in perms if run(Deck(p)).steps == best)
        assert witness.cards == first


def test_table_prefix():
    assert [row[1] for row in table(8)] == [0, 1, 2, 4, 7, 10, 16, 22]


def test_size_guards():
    with pytest.raises(SizeExceededError):
        max_iterations(11)
    with pytest.raises(SizeExceededError):
        max_iterations(12, allow_slow=True)


def test_parallel_blocks_match_serial():
    assert max_iterations(8, workers=2) == max_iterations(8)


@given(st.permutations(list(range(1, 9))))
def test_step_preserves_permutation_and_largest_card_stays_home(cards):
    deck = Deck(tuple(cards))
    trace = []
    run(deck, trace)
    n = len(cards)
    home = False
    for d in trace:
        assert sorted(d.cards) == list(range(1, n + 1))
        if home:
            assert d.cards[n - 1] == n
        home = home or d.cards[n - 1] == n


@pytest.mark.slow
def test_halting_exhaustive_n9():
    # every deck halts: run() returns; max over the block equals the table value
    assert max_iterations(9)[0] == 30

import itertools
import random

import pytest

from veribench.errors import InvalidMatchingError, InvalidPathError, SizeExceededError
from veribench.matching import (AlternatingPath, BipartiteGraph, Matching, PreferenceProfile, Profile,
                                augment, brute_force_max_matching, build_compatibility,
                                find_augmenting_path, format_graph, format_profiles, is_perfect,
                                is_valid_matching, maximum_matching, parse_graph, parse_profiles,
                                random_graph, random_profiles)


def P(req="", off=""):
    return Profile(frozenset(req), frozenset(off))


def complete(n, m):
    return BipartiteGraph(n, m, frozenset(itertools.product(range(n), range(m))))


PATH_2x2 = BipartiteGraph(2, 2, frozenset({(1, 1), (0, 1), (0, 0)}))


# -- build_compatibility ------------------------------------------------------

def test_vacuous_requirements_give_complete_graph():
    prof = PreferenceProfile((P(), P(), P()), (P(), P()))
    assert build_compatibility(prof) == complete(3, 2)


def test_unmet_requirement_removes_edge():
    prof = PreferenceProfile((P("a"),), (P(off=""),))
    assert build_compatibility(prof).edges == frozenset()


def test_compatibility_matches_direct_check():
    for seed in range(20):
        prof = random_profiles(3, 3, "abcd", seed)
        expected = set()
        for i, a in enumerate(prof.left):
            for j, b in enumerate(prof.right):
                if all(x in b.offers for x in a.requires) and all(x in a.offers for x in b.requires):
                    expected.add((i, j))
        assert build_compatibility(prof).edges == expected


# -- find_augmenting_path ----------------------------------------------------------

def test_single_edge_path():
    g = BipartiteGraph(1, 1, frozenset({(0, 0)}))
    assert find_augmenting_path(g, Matching()) == AlternatingPath(((0, 0),))


def test_perfect_matching_has_no_path():
    g = complete(3, 3)
    m = Matching(frozenset({(0, 0), (1, 1), (2, 2)}))
    assert find_augmenting_path(g, m) is None


def test_three_edge_path_on_2x2():
    path = find_augmenting_path(PATH_2x2, Matching(frozenset({(0, 1)})))
    assert path.edges == ((1, 1), (0, 1), (0, 0))
    assert path.vertices == [("L", 1), ("R", 1), ("L", 0), ("R", 0)]


def test_invalid_matching_rejected():
    with pytest.raises(InvalidMatchingError):
        find_augmenting_path(PATH_2x2, Matching(frozenset({(0, 0), (0, 1)})))
    with pytest.raises(InvalidMatchingError):
        find_augmenting_path(PATH_2x2, Matching(frozenset({(1, 0)})))


# -- augment --------------------------------------------------------------------------

def test_augment_empty():
    assert augment(Matching(), AlternatingPath(((0, 0),))).size == 1


def test_augment_three_edge_path():
    m = augment(Matching(frozenset({(0, 1)})), AlternatingPath(((1, 1), (0, 1), (0, 0))))
    assert m.pairs == {(1, 1), (0, 0)}


@pytest.mark.parametrize("edges", [
    ((0, 1),),                    # endpoint already matched
    ((1, 1), (0, 0), (0, 1)),      # does not alternate
    ((1, 1), (0, 1)),              # even length
    (),
])
def test_augment_rejects_non_augmenting(edges):
    with pytest.raises(InvalidPathError):
        augment(Matching(frozenset({(0, 1)})), AlternatingPath(edges))


def test_augment_rejects_disconnected_path():
    m = Matching(frozenset({(0, 1)}))
    with pytest.raises(InvalidPathError):
        augment(m, AlternatingPath(((1, 0), (0, 1), (2, 2))))


# -- maximum_matching / brute force ----------------------------------------------

def test_empty_graph():
    g = BipartiteGraph(0, 0)
    assert maximum_matching(g).size == 0
    assert brute_force_max_matching(g) == 0


def test_complete_3x3():
    g = complete(3, 3)
    m = maximum_matching(g)
    assert m.size == 3 and is_perfect(g, m)


def test_brute_force_1x1():
    assert brute_force_max_matching(BipartiteGraph(1, 1, frozenset({(0, 0)}))) == 1


def test_brute_force_size_guard():
    with pytest.raises(SizeExceededError):
        brute_force_max_matching(BipartiteGraph(9, 1))


def test_unequal_sides():
    g = complete(2, 5)
    assert maximum_matching(g).size == 2
    assert not is_perfect(g, maximum_matching(g))


def test_monotone_progress_and_berge_certificate():
    for seed in range(50):
        g = random_graph(7, 6, 0.35, seed)
        trace = []
        m = maximum_matching(g, trace)
        assert trace == list(range(1, m.size + 1))
        assert len(trace) <= min(g.left_count, g.right_count)
        assert is_valid_matching(g, m)
        assert find_augmenting_path(g, m) is None


def test_all_3x3_graphs_against_oracle():
    # the full <= 4+4 sweep runs in the acceptance suite
    pairs = list(itertools.product(range(3), range(3)))
    for bits in range(1 << 9):
        g = BipartiteGraph(3, 3, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))
        assert maximum_matching(g).size == brute_force_max_matching(g)


def test_seeded_6x6_against_oracle():
    for seed in range(60):
        g = random_graph(6, 6, random.Random(seed).uniform(0.1, 0.6), seed)
        assert maximum_matching(g).size == brute_force_max_matching(g)


# -- file formats ----------------------------------------------------------------------

def test_graph_round_trip():
    g = random_graph(4, 5, 0.5, 3)
    assert parse_graph(format_graph(g)) == g


def test_profile_round_trip_and_parse():
    text = "left 0 requires: a offers: b,c\nright 0 requires: b offers: a\nright 1 requires: offers:\n"
    prof = parse_profiles(text)
    assert prof.left[0] == P("a", "bc")
    assert build_compatibility(prof).edges == {(0, 0)}
    assert parse_profiles(format_profiles(prof)) == prof


def test_graph_rejects_out_of_range_edge():
    with pytest.raises(ValueError):
        parse_graph("1 1\n0 1\n")

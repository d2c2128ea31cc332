"""Maximum bipartite matching by repeated single augmenting-path search."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .errors import InvalidMatchingError, InvalidPathError, SizeExceededError

BRUTE_FORCE_MAX_SIDE = 8


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (0 <= i < self.left_count and 0 <= j < self.right_count):
                raise ValueError(f"edge ({i}, {j}) out of range")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.left_count)]
        for i, j in self.edges:
            adj[i].append(j)
        return tuple(tuple(sorted(a)) for a in adj)


@dataclass(frozen=True)
class Profile:
    requires: frozenset = frozenset()
    offers: frozenset = frozenset()


@dataclass(frozen=True)
class PreferenceProfile:
    left: tuple[Profile, ...]
    right: tuple[Profile, ...]


@dataclass(frozen=True)
class Matching:
    pairs: frozenset = frozenset()

    def __len__(self):
        return len(self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def left_partner(self) -> dict[int, int]:
        return {i: j for i, j in self.pairs}

    def right_partner(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}


@dataclass(frozen=True)
class AlternatingPath:
    """Edges in walk order; edge 0 starts at a free left vertex."""

    edges: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> list[tuple[str, int]]:
        if not self.edges:
            return []
        out = [("L", self.edges[0][0]), ("R", self.edges[0][1])]
        for k, (i, j) in enumerate(self.edges[1:], start=1):
            out.append(("L", i) if k % 2 else ("R", j))
        return out


def validate_matching(graph: BipartiteGraph, matching: Matching) -> None:
    if not matching.pairs <= graph.edges:
        raise InvalidMatchingError("matching uses edges not in the graph")
    lefts = [i for i, _ in matching.pairs]
    rights = [j for _, j in matching.pairs]
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        raise InvalidMatchingError("a vertex is matched twice")


def is_valid_matching(graph: BipartiteGraph, matching: Matching) -> bool:
    try:
        validate_matching(graph, matching)
    except InvalidMatchingError:
        return False
    return True


def build_compatibility(profiles: PreferenceProfile) -> BipartiteGraph:
    edges = {
        (i, j)
        for i, a in enumerate(profiles.left)
        for j, b in enumerate(profiles.right)
        if a.requires <= b.offers and b.requires <= a.offers
    }
    return BipartiteGraph(len(profiles.left), len(profiles.right), frozenset(edges))


def find_augmenting_path(graph: BipartiteGraph, matching: Matching) -> AlternatingPath | None:
    """Breadth-first search from each free left vertex in index order."""
    validate_matching(graph, matching)
    mate_l = matching.left_partner()
    mate_r = matching.right_partner()
    adj = graph.adjacency
    seen_right: set[int] = set()
    for root in range(graph.left_count):
        if root in mate_l:
            continue
        # parent[j] = left vertex that reached right vertex j
        parent: dict[int, int] = {}
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if j in seen_right or mate_l.get(i) == j:
                    continue
                seen_right.add(j)
                parent[j] = i
                if j not in mate_r:
                    return AlternatingPath(tuple(_trace(j, parent, mate_l)))
                queue.append(mate_r[j])
    return None


def _trace(end_right, parent, mate_l):
    path = []
    j = end_right
    while True:
        i = parent[j]
        path.append((i, j))
        if i not in mate_l:
            break
        path.append((i, mate_l[i]))
        j = mate_l[i]
    path.reverse()
    return path


def _check_path(matching: Matching, path: AlternatingPath) -> None:
    edges = path.edges
    if len(edges) % 2 == 0:
        raise InvalidPathError("augmenting path must have an odd edge count")
    for k, e in enumerate(edges):
        if (e in matching.pairs) != (k % 2 == 1):
            raise InvalidPathError("edges must alternate unmatched/matched")
    for k in range(1, len(edges)):
        (i0, j0), (i1, j1) = edges[k - 1], edges[k]
        # matched edges step back to the left side, unmatched ones forward
        if k % 2 == 1 and j0 != j1:
            raise InvalidPathError("path is not connected")
        if k % 2 == 0 and i0 != i1:
            raise InvalidPathError("path is not connected")
    verts = path.vertices
    if len(set(verts)) != len(verts):
        raise InvalidPathError("path revisits a vertex")
    matched_l = {i for i, _ in matching.pairs}
    matched_r = {j for _, j in matching.pairs}
    if edges[0][0] in matched_l or edges[-1][1] in matched_r:
        raise InvalidPathError("path endpoints must be unmatched")


def augment(matching: Matching, path: AlternatingPath, graph: BipartiteGraph | None = None) -> Matching:
    if not path.edges:
        raise InvalidPathError("empty path")
    _check_path(matching, path)
    if graph is not None and not set(path.edges) <= graph.edges:
        raise InvalidPathError("path uses edges not in the graph")
    out = Matching(matching.pairs.symmetric_difference(path.edges))
    assert out.size == matching.size + 1
    return out


def maximum_matching(graph: BipartiteGraph, trace: list | None = None) -> Matching:
    """Augment until no augmenting path remains.

    If ``trace`` is given, the size after each augmentation is appended.
    """
    m = Matching()
    while (path := find_augmenting_path(graph, m)) is not None:
        m = augment(m, path)
        if trace is not None:
            trace.append(m.size)
    return m


def is_perfect(graph: BipartiteGraph, matching: Matching) -> bool:
    return matching.size == graph.left_count == graph.right_count


def brute_force_max_matching(graph: BipartiteGraph) -> int:
    """Exhaustive search over partial injections left -> right."""
    if graph.left_count > BRUTE_FORCE_MAX_SIDE or graph.right_count > BRUTE_FORCE_MAX_SIDE:
        raise SizeExceededError(f"brute force limited to {BRUTE_FORCE_MAX_SIDE} vertices per side")
    adj = graph.adjacency
    best = 0

    def go(i, used, size):
        nonlocal best
        if size + (graph.left_count - i) <= best:
            return
        if i == graph.left_count:
            best = size
            return
        for j in adj[i]:
            if not used >> j & 1:
                go(i + 1, used | 1 << j, size + 1)
        go(i + 1, used, size)

    go(0, 0, 0)
    return best


def random_graph(left: int, right: int, density: float, seed: int) -> BipartiteGraph:
    rng = random.Random(seed)
    edges = {(i, j) for i in range(left) for j in range(right) if rng.random() < density}
    return BipartiteGraph(left, right, frozenset(edges))


def random_profiles(left: int, right: int, alphabet: str, seed: int, max_size: int = 2) -> PreferenceProfile:
    rng = random.Random(seed)

    def one():
        req = frozenset(rng.sample(alphabet, rng.randint(0, max_size)))
        off = frozenset(rng.sample(alphabet, rng.randint(0, len(alphabet))))
        return Profile(req, off)

    return PreferenceProfile(tuple(one() for _ in range(left)), tuple(one() for _ in range(right)))


def parse_graph(text: str) -> BipartiteGraph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("graph file needs an 'L R' header")
    left, right = int(lines[0][0]), int(lines[0][1])
    return BipartiteGraph(left, right, frozenset((int(a), int(b)) for a, b in lines[1:]))


def format_graph(graph: BipartiteGraph) -> str:
    rows = [f"{graph.left_count} {graph.right_count}"]
    rows += [f"{i} {j}" for i, j in sorted(graph.edges)]
    return "\n".join(rows) + "\n"


def _attrs(text: str) -> frozenset:
    return frozenset(a.strip() for a in text.split(",") if a.strip())


def parse_profiles(text: str) -> PreferenceProfile:
    """Lines of the form ``side index requires: a,b offers: c,d``."""
    sides: dict[str, dict[int, Profile]] = {"left": {}, "right": {}}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition("requires:")
        side, index = head.split()
        req, _, off = rest.partition("offers:")
        side = {"l": "left", "left": "left", "r": "right", "right": "right"}[side.lower()]
        sides[side][int(index)] = Profile(_attrs(req), _attrs(off))
    out = []
    for side in ("left", "right"):
        d = sides[side]
        if sorted(d) != list(range(len(d))):
            raise ValueError(f"{side} indices must be 0..k-1")
        out.append(tuple(d[k] for k in range(len(d))))
    return PreferenceProfile(*out)


def format_profiles(profiles: PreferenceProfile) -> str:
    rows = []
    for side, group in (("left", profiles.left), ("right", profiles.right)):
        for k, p in enumerate(group):
            rows.append(f"{side} {k} requires: {','.join(sorted(p.requires))} offers: {','.join(sorted(p.offers))}")
    return "\n".join(rows) + "\n"

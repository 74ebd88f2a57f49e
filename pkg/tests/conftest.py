"""Shared test helpers: instance builders, random samplers, brute-force checkers."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from efhouse.bigraph import BipartiteGraph, Matching
from efhouse.prefs import PreferenceProfile


def profile_from_orders(*orders: tuple[int, ...]) -> PreferenceProfile:
    """Build a strict profile from per-agent house orders (most preferred first)."""
    m = len(orders[0])
    rows = []
    for order in orders:
        assert sorted(order) == list(range(1, m + 1))
        ranks = [0] * m
        for position, house in enumerate(order, start=1):
            ranks[house - 1] = position
        rows.append(tuple(ranks))
    return PreferenceProfile(len(orders), m, tuple(rows))


def random_strict_profile(rng: random.Random, n: int, m: int) -> PreferenceProfile:
    orders = []
    for _ in range(n):
        order = list(range(1, m + 1))
        rng.shuffle(order)
        orders.append(tuple(order))
    return profile_from_orders(*orders)


def random_tie_profile(
    rng: random.Random, n: int, m: int, tie_prob: float = 0.35
) -> PreferenceProfile:
    """Random weak-order profile: shuffled houses merged into tie groups."""
    rows = []
    for _ in range(n):
        order = list(range(1, m + 1))
        rng.shuffle(order)
        ranks = [0] * m
        group_rank = 1
        ranks[order[0] - 1] = 1
        for position in range(1, m):
            if rng.random() >= tie_prob:
                group_rank = position + 1
            ranks[order[position] - 1] = group_rank
        rows.append(tuple(ranks))
    return PreferenceProfile(n, m, tuple(rows))


def random_bipartite_graph(
    rng: random.Random, n_left: int, n_right: int, density: float
) -> BipartiteGraph:
    edges = [
        (x, y)
        for x in range(1, n_left + 1)
        for y in range(1, n_right + 1)
        if rng.random() < density
    ]
    return BipartiteGraph.from_edges(n_left, n_right, edges)


def brute_force_max_matching_size(graph: BipartiteGraph) -> int:
    """Exhaustive maximum matching size; independent of the library's search."""

    def best(x: int, used: frozenset[int]) -> int:
        if x > graph.n_left:
            return 0
        result = best(x + 1, used)
        for y in graph.adj[x - 1]:
            if y not in used:
                result = max(result, 1 + best(x + 1, used | {y}))
        return result

    return best(1, frozenset())


def has_augmenting_path(graph: BipartiteGraph, matching: Matching) -> bool:
    """True when some unmatched left vertex can reach an unmatched right vertex."""
    owner = matching.right_to_left()
    matched_left = {x for x, _ in matching.pairs}
    for start in range(1, graph.n_left + 1):
        if start in matched_left:
            continue
        seen_right: set[int] = set()
        stack = [start]
        while stack:
            x = stack.pop()
            for y in graph.adj[x - 1]:
                if y in seen_right:
                    continue
                seen_right.add(y)
                back = owner.get(y)
                if back is None:
                    return True
                stack.append(back)
    return False


def violator_is_subset_minimal(graph: BipartiteGraph, vertices: frozenset[int]) -> bool:
    """Check by enumeration that no proper subset of `vertices` is deficient."""
    from efhouse.bigraph import neighborhood

    for size in range(1, len(vertices)):
        for subset in itertools.combinations(sorted(vertices), size):
            if len(subset) > len(neighborhood(graph, subset)):
                return False
    return True


@st.composite
def tie_profiles(draw, max_agents: int = 4, max_houses: int = 5, min_houses: int = 1):
    n = draw(st.integers(1, max_agents))
    m = draw(st.integers(min_houses, max_houses))
    rows = []
    for _ in range(n):
        order = draw(st.permutations(list(range(1, m + 1))))
        merges = draw(st.lists(st.booleans(), min_size=m - 1, max_size=m - 1))
        ranks = [0] * m
        group_rank = 1
        ranks[order[0] - 1] = 1
        for position in range(1, m):
            if not merges[position - 1]:
                group_rank = position + 1
            ranks[order[position] - 1] = group_rank
        rows.append(tuple(ranks))
    return PreferenceProfile(n, m, tuple(rows))


@st.composite
def solvable_shapes(draw, max_agents: int = 3, max_houses: int = 5):
    """(n, m) with m >= n, small enough for the enumeration oracle."""
    n = draw(st.integers(1, max_agents))
    m = draw(st.integers(n, max_houses))
    return n, m


@st.composite
def bipartite_graphs(draw, max_left: int = 6, max_right: int = 6):
    n_left = draw(st.integers(0, max_left))
    n_right = draw(st.integers(0, max_right))
    rows = []
    for _ in range(n_left):
        if n_right == 0:
            rows.append(())
            continue
        neighbors = draw(
            st.sets(st.integers(1, n_right), min_size=0, max_size=n_right)
        )
        rows.append(tuple(sorted(neighbors)))
    return BipartiteGraph(n_left, n_right, tuple(rows))

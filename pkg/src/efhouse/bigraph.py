"""Bipartite matching machinery: maximum matching, saturation, deficiency certificates."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on left vertices 1..n_left and right vertices 1..n_right.

    ``adj[x - 1]`` holds the right-side neighbors of left vertex ``x`` as a
    sorted, duplicate-free tuple. Immutable once built.
    """

    n_left: int
    n_right: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_left < 0 or self.n_right < 0:
            raise ValueError("vertex counts must be nonnegative")
        if len(self.adj) != self.n_left:
            raise ValueError(f"expected {self.n_left} adjacency rows, got {len(self.adj)}")
        for row in self.adj:
            if any(not 1 <= y <= self.n_right for y in row):
                raise ValueError(f"right vertex out of range 1..{self.n_right}")
            if list(row) != sorted(set(row)):
                raise ValueError("adjacency rows must be sorted and duplicate-free")

    @classmethod
    def from_edges(
        cls, n_left: int, n_right: int, edges: Iterable[tuple[int, int]]
    ) -> "BipartiteGraph":
        neighbors: list[set[int]] = [set() for _ in range(n_left)]
        for x, y in edges:
            if not 1 <= x <= n_left:
                raise ValueError(f"left vertex {x} out of range 1..{n_left}")
            if not 1 <= y <= n_right:
                raise ValueError(f"right vertex {y} out of range 1..{n_right}")
            neighbors[x - 1].add(y)
        return cls(n_left, n_right, tuple(tuple(sorted(s)) for s in neighbors))


@dataclass(frozen=True)
class Matching:
    """Set of disjoint (left, right) edges."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        lefts = [x for x, _ in self.pairs]
        rights = [y for _, y in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("a vertex appears in two matching pairs")

    def size(self) -> int:
        return len(self.pairs)

    def left_to_right(self) -> dict[int, int]:
        return {x: y for x, y in self.pairs}

    def right_to_left(self) -> dict[int, int]:
        return {y: x for x, y in self.pairs}


@dataclass(frozen=True)
class HallViolator:
    """Left vertex set with fewer joint neighbors than members.

    Instances are minimal: the vertex count exceeds the neighborhood size by
    exactly one, and no proper subset is itself deficient.
    """

    vertices: frozenset[int]
    neighborhood: frozenset[int]

    def __post_init__(self):
        if len(self.vertices) != len(self.neighborhood) + 1:
            raise ValueError(
                "violator must have exactly one more vertex than its neighborhood"
            )


def neighborhood(graph: BipartiteGraph, subset: Iterable[int]) -> set[int]:
    """Union of right-side neighbors over the given left vertices."""
    result: set[int] = set()
    for x in subset:
        if not 1 <= x <= graph.n_left:
            raise ValueError(f"left vertex {x} out of range 1..{graph.n_left}")
        result.update(graph.adj[x - 1])
    return result


def maximum_matching(graph: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching via augmenting-path search.

    Left vertices are processed in increasing index order and adjacency is
    scanned in sorted order, so the matched/unmatched split is the same on
    every run for a fixed graph.
    """
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}
    for start in range(1, graph.n_left + 1):
        # breadth-first search for an augmenting path rooted at `start`;
        # parents[v] = (previous left vertex, right vertex between them)
        parents: dict[int, tuple[int, int] | None] = {start: None}
        queue = deque([start])
        goal: tuple[int, int] | None = None
        while queue and goal is None:
            x = queue.popleft()
            for y in graph.adj[x - 1]:
                owner = match_right.get(y)
                if owner is None:
                    goal = (x, y)
                    break
                if owner not in parents:
                    parents[owner] = (x, y)
                    queue.append(owner)
        if goal is None:
            continue
        x, y = goal
        while True:
            previous = parents[x]
            match_left[x] = y
            match_right[y] = x
            if previous is None:
                break
            x, y = previous
    return Matching(frozenset(match_left.items()))


def is_saturating(matching: Matching, graph: BipartiteGraph) -> bool:
    """True when every left vertex is covered by the matching."""
    return len({x for x, _ in matching.pairs}) == graph.n_left


def minimal_hall_violator(graph: BipartiteGraph, matching: Matching) -> HallViolator:
    """Extract a minimal deficient left set from a non-saturating maximum matching.

    Starting at the lowest-indexed unmatched left vertex, walks the
    alternating-reachability digraph (left-to-right along every edge,
    right-to-left along matched edges) with an iterative depth-first search.
    The left vertices reached form the violator; the right vertices reached
    are exactly its neighborhood, returned alongside so callers need not
    recompute it.

    The matching must be a maximum matching; that is not checked here, and
    passing anything else produces a meaningless result. A saturating
    matching raises ValueError.
    """
    matched_left = {x for x, _ in matching.pairs}
    owner = matching.right_to_left()
    seed = next(
        (x for x in range(1, graph.n_left + 1) if x not in matched_left), None
    )
    if seed is None:
        raise ValueError("matching covers the whole left side; no violator exists")
    reached_left = {seed}
    reached_right: set[int] = set()
    stack = [seed]
    while stack:
        x = stack.pop()
        for y in graph.adj[x - 1]:
            if y in reached_right:
                continue
            reached_right.add(y)
            back = owner.get(y)
            if back is not None and back not in reached_left:
                reached_left.add(back)
                stack.append(back)
    return HallViolator(frozenset(reached_left), frozenset(reached_right))


def format_alternating_digraph(graph: BipartiteGraph, matching: Matching) -> str:
    """Adjacency-list dump of the digraph walked by minimal_hall_violator.

    Left vertices print as ``L<i>``, right as ``R<j>``; one line per vertex
    with outgoing edges. Intended for debugging via the CLI.
    """
    owner = matching.right_to_left()
    lines = []
    for x in range(1, graph.n_left + 1):
        targets = " ".join(f"R{y}" for y in graph.adj[x - 1])
        lines.append(f"L{x} -> {targets}".rstrip())
    for y in sorted(owner):
        lines.append(f"R{y} -> L{owner[y]}")
    return "\n".join(lines)

"""Envy-free assignment solver.

The solve loop repeatedly matches agents to their favorite houses among the
ones still on offer. When that favorites graph has no agent-saturating
matching, a minimal deficient agent set pinpoints houses that cannot appear
in any envy-free assignment; those are discarded and the loop retries on the
smaller house set. The loop ends with either a saturating matching (an
envy-free assignment, since everyone holds a favorite among the assigned
houses) or fewer houses than agents (a proof of nonexistence).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .bigraph import (
    BipartiteGraph,
    HallViolator,
    Matching,
    is_saturating,
    maximum_matching,
    minimal_hall_violator,
)
from .prefs import PreferenceProfile, top_choices


class InvalidInstanceError(ValueError):
    """Instance cannot admit any total injective assignment (fewer houses than agents)."""


@dataclass(frozen=True)
class Assignment:
    """Total injective map from agents to houses; ``houses[i]`` serves agent ``i + 1``."""

    houses: tuple[int, ...]

    def __post_init__(self):
        if not self.houses:
            raise ValueError("assignment must cover at least one agent")
        if any(h < 1 for h in self.houses):
            raise ValueError("house ids are 1-based")
        if len(set(self.houses)) != len(self.houses):
            raise ValueError("a house is assigned to two agents")

    @property
    def n_agents(self) -> int:
        return len(self.houses)

    def house_of(self, agent: int) -> int:
        return self.houses[agent - 1]

    def mapping(self) -> dict[int, int]:
        """Agent -> house dict view (both 1-based)."""
        return {agent + 1: house for agent, house in enumerate(self.houses)}


@dataclass(frozen=True)
class IterationRecord:
    """One pass of the solve loop.

    ``available`` is the house set on offer when the pass started; ``graph``
    and ``matching`` are the favorites graph built on it and its maximum
    matching. When the matching is not saturating, ``violator`` holds the
    minimal deficient agent set and ``removed`` the houses pruned (its
    neighborhood); both are empty/None on the final, saturating pass.
    """

    available: frozenset[int]
    graph: BipartiteGraph
    matching: Matching
    saturating: bool
    violator: HallViolator | None
    removed: frozenset[int]


@dataclass(frozen=True)
class SolveTrace:
    """Full iteration history plus the outcome (None = proven nonexistence)."""

    iterations: tuple[IterationRecord, ...]
    assignment: Assignment | None


def envy_free_assignment(
    profile: PreferenceProfile,
) -> tuple[Assignment | None, SolveTrace]:
    """Compute an envy-free assignment, or prove that none exists.

    Returns the assignment (or None) together with the per-iteration trace.
    The trace doubles as a human-auditable certificate on the None side:
    every removed house is provably unusable by any envy-free assignment.
    Deterministic: ties and choices are always broken toward lower ids.

    Raises InvalidInstanceError when the profile has fewer houses than
    agents.
    """
    n, m = profile.n_agents, profile.n_houses
    if m < n:
        raise InvalidInstanceError(
            f"{n} agents need at least {n} houses, instance has {m}"
        )
    available = set(range(1, m + 1))
    records: list[IterationRecord] = []
    assignment: Assignment | None = None
    while len(available) >= n:
        rows = tuple(
            tuple(sorted(top_choices(profile, agent, available)))
            for agent in range(1, n + 1)
        )
        graph = BipartiteGraph(n, m, rows)
        matching = maximum_matching(graph)
        if is_saturating(matching, graph):
            by_agent = matching.left_to_right()
            assignment = Assignment(tuple(by_agent[a] for a in range(1, n + 1)))
            records.append(
                IterationRecord(
                    frozenset(available), graph, matching, True, None, frozenset()
                )
            )
            break
        violator = minimal_hall_violator(graph, matching)
        removed = violator.neighborhood
        records.append(
            IterationRecord(
                frozenset(available), graph, matching, False, violator, removed
            )
        )
        available -= removed
    return assignment, SolveTrace(tuple(records), assignment)


def verify_envy_free(profile: PreferenceProfile, assignment: Assignment) -> bool:
    """True when no agent strictly prefers another agent's house to her own."""
    if assignment.n_agents != profile.n_agents:
        raise ValueError(
            f"assignment covers {assignment.n_agents} agents, profile has {profile.n_agents}"
        )
    if any(h > profile.n_houses for h in assignment.houses):
        raise ValueError("assignment uses a house outside the profile")
    for agent in range(1, profile.n_agents + 1):
        row = profile.ranks[agent - 1]
        own = row[assignment.houses[agent - 1] - 1]
        for house in assignment.houses:
            if row[house - 1] < own:
                return False
    return True


def result_json(trace: SolveTrace, include_trace: bool = True) -> dict[str, Any]:
    """JSON-ready dict in the documented wire format.

    ``{"status": "found"|"none", "assignment": {agent: house, ...} | null,
    "trace": [...] | null}`` with agents as string keys and the trace listing
    each iteration's house set, saturation flag, violator, and removals.
    """
    found = trace.assignment is not None
    out: dict[str, Any] = {
        "status": "found" if found else "none",
        "assignment": (
            {str(agent): house for agent, house in sorted(trace.assignment.mapping().items())}
            if found
            else None
        ),
        "trace": None,
    }
    if include_trace:
        out["trace"] = [
            {
                "houses": sorted(rec.available),
                "saturating": rec.saturating,
                "violator": (
                    None
                    if rec.violator is None
                    else {
                        "agents": sorted(rec.violator.vertices),
                        "houses": sorted(rec.violator.neighborhood),
                    }
                ),
                "removed": sorted(rec.removed),
            }
            for rec in trace.iterations
        ]
    return out

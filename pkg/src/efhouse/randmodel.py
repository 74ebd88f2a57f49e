"""Random preference models and Monte Carlo existence estimates.

All randomness flows through numpy's PCG64 bit generator seeded with a
SeedSequence, which numpy guarantees to be stream-stable across versions;
published statistics are therefore reproducible from the seed alone.
Per-trial generators are keyed by (master seed, trial index), so trials are
independent of execution order and safe to parallelize.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .prefs import PreferenceProfile
from .solver import Assignment, InvalidInstanceError, envy_free_assignment


@dataclass(frozen=True, eq=False)
class UtilityMatrix:
    """Cardinal utilities in [0, 1]; rows are agents, columns are houses."""

    values: np.ndarray

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.size == 0:
            raise ValueError("utilities must form a nonempty 2-d array")
        if self.values.min() < 0.0 or self.values.max() > 1.0:
            raise ValueError("utilities must lie in [0, 1]")

    @property
    def n_agents(self) -> int:
        return self.values.shape[0]

    @property
    def n_houses(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class MonteCarloStats:
    """Aggregated counts from one simulation configuration."""

    n_agents: int
    n_houses: int
    trials: int
    successes: int
    mechanism_successes: int
    success_fraction: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError("successes must lie in 0..trials")
        if not 0 <= self.mechanism_successes <= self.successes:
            # a completed mechanism run implies an envy-free assignment exists
            raise ValueError("mechanism successes cannot exceed solver successes")


def _generator(seed: int, *key: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *key])))


def sample_strict_profile(n: int, m: int, seed: int) -> PreferenceProfile:
    """Profile where each agent draws an independent uniform strict ranking."""
    if n < 1 or m < 1:
        raise ValueError("need at least one agent and one house")
    rng = _generator(seed)
    rows = []
    for _ in range(n):
        order = rng.permutation(m)  # order[k] = 0-based house preferred k-th
        ranks = np.empty(m, dtype=np.int64)
        ranks[order] = np.arange(1, m + 1)
        rows.append(tuple(int(r) for r in ranks))
    return PreferenceProfile(n, m, tuple(rows))


def sample_utilities(n: int, m: int, seed: int) -> UtilityMatrix:
    """Utilities drawn iid uniform from [0, 1)."""
    if n < 1 or m < 1:
        raise ValueError("need at least one agent and one house")
    return UtilityMatrix(_generator(seed).random((n, m)))


def utilities_to_profile(utilities: UtilityMatrix) -> PreferenceProfile:
    """Strict ranking per agent by decreasing utility.

    Exact utility ties have probability zero under any non-atomic draw; if
    they occur anyway they break toward the lower house id.
    """
    values = utilities.values
    n, m = values.shape
    positions = np.arange(1, m + 1)
    rows = []
    for i in range(n):
        order = np.argsort(-values[i], kind="stable")
        ranks = np.empty(m, dtype=np.int64)
        ranks[order] = positions
        rows.append(tuple(int(r) for r in ranks))
    return PreferenceProfile(n, m, tuple(rows))


def threshold_mechanism(utilities: UtilityMatrix) -> Assignment | None:
    """Greedy one-pass assignment using the 1 - 1/n utility cutoff.

    Houses are scanned in increasing id order. A house is claimed by agent i
    when i values it at or above the cutoff and every other agent values it
    strictly below (so each house can be claimed by at most one agent),
    provided i has not been served yet. Returns the assignment only when
    every agent ends up with a house, else None.

    With a single agent the cutoff is degenerate and the agent simply takes
    a favorite house.
    """
    values = utilities.values
    n, m = values.shape
    if n == 1:
        return Assignment((int(np.argmax(values[0])) + 1,))
    cutoff = 1.0 - 1.0 / n
    above = values >= cutoff
    claimable = np.flatnonzero(above.sum(axis=0) == 1)
    assigned: dict[int, int] = {}
    for house in claimable:
        agent = int(above[:, house].argmax())
        if agent not in assigned:
            assigned[agent] = int(house) + 1
            if len(assigned) == n:
                break
    if len(assigned) < n:
        return None
    return Assignment(tuple(assigned[i] for i in range(n)))


def estimate_existence_probability(
    n: int, m: int, trials: int, seed: int
) -> MonteCarloStats:
    """Monte Carlo estimate of how often an envy-free assignment exists.

    Each trial draws a fresh uniform utility matrix, solves the induced
    ordinal profile, and also runs the threshold mechanism on the same
    utilities; both success counts land in the returned stats. Fixed
    (n, m, trials, seed) always reproduces the same numbers.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if m < n:
        raise InvalidInstanceError(
            f"{n} agents need at least {n} houses, instance has {m}"
        )
    successes = 0
    mechanism_successes = 0
    for trial in range(trials):
        utilities = UtilityMatrix(_generator(seed, trial).random((n, m)))
        profile = utilities_to_profile(utilities)
        found, _ = envy_free_assignment(profile)
        if found is not None:
            successes += 1
        if threshold_mechanism(utilities) is not None:
            mechanism_successes += 1
    return MonteCarloStats(
        n_agents=n,
        n_houses=m,
        trials=trials,
        successes=successes,
        mechanism_successes=mechanism_successes,
        success_fraction=successes / trials,
        seed=seed,
    )

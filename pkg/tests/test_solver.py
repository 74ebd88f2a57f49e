import json
import random

import pytest
from hypothesis import given, settings

from conftest import profile_from_orders, random_strict_profile, random_tie_profile, tie_profiles
from efhouse.oracle import enumerate_ef_assignments, is_pareto_among_ef
from efhouse.prefs import parse_profile, top_choices
from efhouse.solver import (
    Assignment,
    InvalidInstanceError,
    envy_free_assignment,
    result_json,
    verify_envy_free,
)

GOLDEN = parse_profile("2 3\n1 > 2 > 3\n1 > 3 > 2")


def test_golden_instance_assignment():
    assignment, trace = envy_free_assignment(GOLDEN)
    assert assignment.mapping() == {1: 2, 2: 3}
    assert [rec.saturating for rec in trace.iterations] == [False, True]
    assert trace.iterations[0].removed == {1}
    assert trace.iterations[1].available == {2, 3}


def test_two_agents_two_houses_same_ranking_has_no_solution():
    profile = profile_from_orders((1, 2), (1, 2))
    assignment, trace = envy_free_assignment(profile)
    assert assignment is None
    assert trace.assignment is None
    assert len(trace.iterations) == 1  # m == n exits after a single pass


def test_single_agent_takes_lowest_tied_top_house():
    profile = parse_profile("1 4\n3 = 2 > 1 = 4")
    assignment, _ = envy_free_assignment(profile)
    assert assignment.mapping() == {1: 2}


def test_more_agents_than_houses_rejected():
    profile = profile_from_orders((1, 2), (2, 1), (1, 2))
    with pytest.raises(InvalidInstanceError):
        envy_free_assignment(profile)


def test_verify_envy_free_golden():
    assert verify_envy_free(GOLDEN, Assignment((2, 3)))
    assert not verify_envy_free(GOLDEN, Assignment((1, 2)))


def test_verify_envy_free_detects_envy():
    profile = profile_from_orders((1, 2), (1, 2))
    assert not verify_envy_free(profile, Assignment((1, 2)))


def test_verify_envy_free_single_agent_is_vacuous():
    profile = profile_from_orders((2, 1, 3))
    assert verify_envy_free(profile, Assignment((3,)))


def test_verify_envy_free_validates_shape():
    with pytest.raises(ValueError):
        verify_envy_free(GOLDEN, Assignment((2,)))
    with pytest.raises(ValueError):
        verify_envy_free(GOLDEN, Assignment((2, 9)))


def test_assignment_rejects_duplicates():
    with pytest.raises(ValueError):
        Assignment((1, 1))


def test_solver_is_deterministic():
    rng = random.Random(5)
    for _ in range(40):
        profile = random_tie_profile(rng, rng.randint(1, 4), rng.randint(4, 6))
        first = envy_free_assignment(profile)
        second = envy_free_assignment(profile)
        assert first == second


def test_solver_agrees_with_oracle_on_random_strict_instances():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 3)
        m = rng.randint(n, 5)
        profile = random_strict_profile(rng, n, m)
        assignment, trace = envy_free_assignment(profile)
        all_ef = enumerate_ef_assignments(profile)
        assert (assignment is not None) == bool(all_ef)
        if assignment is not None:
            assert assignment in all_ef
            assert verify_envy_free(profile, assignment)
            assert is_pareto_among_ef(profile, assignment)


@settings(max_examples=120)
@given(tie_profiles(max_agents=3, max_houses=5))
def test_solver_sound_and_complete_with_ties(profile):
    if profile.n_houses < profile.n_agents:
        with pytest.raises(InvalidInstanceError):
            envy_free_assignment(profile)
        return
    assignment, trace = envy_free_assignment(profile)
    assert (assignment is not None) == bool(enumerate_ef_assignments(profile))
    if assignment is not None:
        assert verify_envy_free(profile, assignment)
        final = trace.iterations[-1]
        for agent in range(1, profile.n_agents + 1):
            assert assignment.house_of(agent) in top_choices(
                profile, agent, set(final.available)
            )


@settings(max_examples=120)
@given(tie_profiles(max_agents=4, max_houses=6))
def test_trace_invariants(profile):
    if profile.n_houses < profile.n_agents:
        return
    n, m = profile.n_agents, profile.n_houses
    _, trace = envy_free_assignment(profile)
    assert 1 <= len(trace.iterations) <= m - n + 1
    removed_sets = [rec.removed for rec in trace.iterations]
    for i, first in enumerate(removed_sets):
        for second in removed_sets[i + 1 :]:
            assert not (first & second)
    for rec in trace.iterations[:-1]:
        assert rec.removed  # every non-terminal pass prunes something
    if m == n:
        assert len(trace.iterations) == 1


def test_result_json_found_and_none():
    _, trace = envy_free_assignment(GOLDEN)
    payload = json.loads(json.dumps(result_json(trace)))
    assert payload["status"] == "found"
    assert payload["assignment"] == {"1": 2, "2": 3}
    assert payload["trace"][0] == {
        "houses": [1, 2, 3],
        "saturating": False,
        "violator": {"agents": [1, 2], "houses": [1]},
        "removed": [1],
    }
    assert result_json(trace, include_trace=False)["trace"] is None

    _, trace = envy_free_assignment(profile_from_orders((1, 2), (1, 2)))
    payload = result_json(trace)
    assert payload["status"] == "none"
    assert payload["assignment"] is None

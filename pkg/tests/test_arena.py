import random

import pytest

from ratverify.arena import Lasso, inf_set, outcome, validate_arena
from ratverify.errors import SinkVertex, UnknownPlayer, UnknownVertex
from ratverify.strategy import enumerate_profiles

from gamegen import example1_arena, inf_by_counting, random_arena, simulate


def test_triangle_accepted(triangle):
    assert triangle.players == (0, 1, 2)
    assert triangle.initial == "v0"
    assert triangle.successors("v0") == ("v2", "v1")


def test_minimal_arena_accepted(loop):
    assert loop.successors("v0") == ("v0",)


def test_sink_vertex_rejected():
    with pytest.raises(SinkVertex) as exc:
        validate_arena((0,), ("v0", "v1"), {"v0": 0, "v1": 0}, "v0",
                       [("v0", "v1")])
    assert exc.value.vertex == "v1"


def test_unknown_edge_endpoint_rejected():
    with pytest.raises(UnknownVertex):
        validate_arena((0,), ("v0",), {"v0": 0}, "v0", [("v0", "v9")])


def test_unknown_owner_rejected():
    with pytest.raises(UnknownPlayer):
        validate_arena((0,), ("v0",), {"v0": 7}, "v0", [("v0", "v0")])


def test_duplicate_edges_idempotent():
    arena = validate_arena((0,), ("v0",), {"v0": 0}, "v0",
                           [("v0", "v0"), ("v0", "v0")])
    assert arena.edges == (("v0", "v0"),)


def test_outcome_full_cycle(triangle):
    lasso = outcome(triangle, {"v0": "v1", "v1": "v2", "v2": "v0"})
    assert lasso == Lasso((), ("v0", "v1", "v2"))


def test_outcome_two_cycle(triangle):
    lasso = outcome(triangle, {"v0": "v1", "v1": "v0", "v2": "v0"})
    assert lasso == Lasso((), ("v0", "v1"))


def test_outcome_self_loop(loop):
    assert outcome(loop, {"v0": "v0"}) == Lasso((), ("v0",))


def test_inf_set_is_cycle():
    assert inf_set(Lasso((), ("v0", "v1", "v2"))) == {"v0", "v1", "v2"}
    assert inf_set(Lasso((), ("v0", "v1"))) == {"v0", "v1"}
    assert inf_set(Lasso(("v0",), ("v1",))) == {"v1"}


def test_lasso_bounds_and_determinism():
    rng = random.Random(7)
    for _ in range(50):
        arena = random_arena(rng)
        for profile in enumerate_profiles(arena):
            first = outcome(arena, profile)
            assert outcome(arena, profile) == first
            assert len(first.prefix) + len(first.cycle) <= len(arena.vertices)
            assert len(set(first.prefix + first.cycle)) == \
                len(first.prefix) + len(first.cycle)


def test_unroll_matches_naive_simulation():
    rng = random.Random(11)
    for _ in range(30):
        arena = random_arena(rng)
        n = len(arena.vertices)
        for profile in enumerate_profiles(arena):
            lasso = outcome(arena, profile)
            assert lasso.unroll(3 * n) == simulate(arena, profile, 3 * n)


def test_inf_set_matches_visit_counting():
    rng = random.Random(13)
    for _ in range(30):
        arena = random_arena(rng)
        for profile in enumerate_profiles(arena):
            assert inf_set(outcome(arena, profile)) == inf_by_counting(arena, profile)

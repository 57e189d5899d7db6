import itertools

import pytest

from ratverify.arena import validate_arena
from ratverify.epistemic import make_frame, make_model
from ratverify.formulas import buchi_to_muller
from ratverify.strategy import PositionalProfile, PositionalStrategy

from gamegen import example1_arena, self_loop_arena


@pytest.fixture
def triangle():
    return example1_arena()


@pytest.fixture
def loop():
    return self_loop_arena()


@pytest.fixture
def buchi_next(triangle):
    """Objective profile of the three-player example: each player wants
    the next player's vertex infinitely often."""
    return {p: buchi_to_muller({f"v{(p + 1) % 3}"}, triangle) for p in triangle.players}


@pytest.fixture
def buchi_own(triangle):
    """Each player wants her own vertex infinitely often."""
    return {p: buchi_to_muller({f"v{p}"}, triangle) for p in triangle.players}


def rotation_strategy(player, direction):
    """s^R sends v_p to v_{p-1}, s^L sends v_p to v_{p+1} (mod 3)."""
    delta = -1 if direction == "R" else 1
    return PositionalStrategy(player, ((f"v{player}", f"v{(player + delta) % 3}"),))


def rotation_profile(word):
    """Profile named by a three-letter R/L word, one letter per player."""
    return PositionalProfile(tuple(
        rotation_strategy(p, letter) for p, letter in enumerate(word)))


@pytest.fixture
def letters_model(triangle):
    """Eight-world model over the R/L words: player p cannot distinguish
    worlds agreeing on her own letter."""
    worlds = ["".join(w) for w in itertools.product("RL", repeat=3)]
    partitions = {
        p: [frozenset(w for w in worlds if w[p] == letter) for letter in "RL"]
        for p in triangle.players}
    frame = make_frame(worlds, partitions)
    assignment = {w: rotation_profile(w) for w in worlds}
    return make_model(frame, assignment)

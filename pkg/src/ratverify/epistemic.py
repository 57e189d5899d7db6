"""KT5 Kripke frames, knowledge operators and epistemic rationality.

Per-player indistinguishability is stored as a partition of the world set,
so reflexivity, symmetry and transitivity hold by construction.  Raw
relations can still be supplied and are rejected unless they are
equivalence relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from .arena import Arena
from .errors import EmptySet, GameError, UnknownPlayer
from .formulas import Formula, winners
from .strategy import (PositionalProfile, deviate, enumerate_strategies,
                       profile_key, sort_key)

Event = FrozenSet[str]


@dataclass(frozen=True)
class KripkeFrame:
    worlds: Tuple[str, ...]
    partitions: Mapping[object, Tuple[FrozenSet[str], ...]]

    def players(self):
        return tuple(self.partitions)

    def class_of(self, player, world: str) -> FrozenSet[str]:
        for cls in self.partitions[player]:
            if world in cls:
                return cls
        raise UnknownPlayer(player) if player not in self.partitions else KeyError(world)


def make_frame(worlds: Iterable[str], partitions: Mapping[object, Iterable[Iterable[str]]]) -> KripkeFrame:
    """Build a frame from per-player partitions, checking that each one
    covers the world set with pairwise disjoint classes."""
    worlds = tuple(worlds)
    wset = set(worlds)
    if len(wset) != len(worlds):
        raise GameError("duplicate world identifier")
    frozen: Dict[object, Tuple[FrozenSet[str], ...]] = {}
    for p, classes in partitions.items():
        covered = set()
        out = []
        for cls in classes:
            fcls = frozenset(cls)
            if not fcls <= wset:
                raise GameError(f"partition class {sorted(fcls)} uses unknown worlds")
            if covered & fcls:
                raise GameError(f"overlapping classes for player {p!r}")
            covered |= fcls
            out.append(fcls)
        if covered != wset:
            raise GameError(f"partition for player {p!r} does not cover all worlds")
        frozen[p] = tuple(out)
    return KripkeFrame(worlds, frozen)


def frame_from_relations(worlds: Iterable[str],
                         relations: Mapping[object, Iterable[Tuple[str, str]]]) -> KripkeFrame:
    """Accept raw relations, rejecting any that is not an equivalence."""
    worlds = tuple(worlds)
    wset = set(worlds)
    partitions = {}
    for p, rel in relations.items():
        pairs = set(rel)
        for (a, b) in pairs:
            if a not in wset or b not in wset:
                raise GameError(f"relation of player {p!r} mentions unknown world")
        for w in worlds:
            if (w, w) not in pairs:
                raise GameError(f"relation of player {p!r} is not reflexive at {w!r}")
        for (a, b) in pairs:
            if (b, a) not in pairs:
                raise GameError(f"relation of player {p!r} is not symmetric")
        for (a, b) in pairs:
            for (c, d) in pairs:
                if b == c and (a, d) not in pairs:
                    raise GameError(f"relation of player {p!r} is not transitive")
        classes = []
        seen = set()
        for w in worlds:
            if w in seen:
                continue
            cls = frozenset(x for x in worlds if (w, x) in pairs)
            seen |= cls
            classes.append(cls)
        partitions[p] = classes
    return make_frame(worlds, partitions)


def know(frame: KripkeFrame, player, event: Event) -> Event:
    """Worlds whose entire indistinguishability class lies in the event."""
    event = frozenset(event)
    out = set()
    for cls in frame.partitions[player]:
        if cls <= event:
            out |= cls
    return frozenset(out)


def mutual_know(frame: KripkeFrame, event: Event) -> Event:
    result = frozenset(event)
    acc = frozenset(frame.worlds)
    for p in frame.partitions:
        acc &= know(frame, p, result)
    return acc


def common_know(frame: KripkeFrame, event: Event) -> Event:
    """Worlds whose whole reachable component (transitive closure of the
    union of all players' relations) lies inside the event."""
    comp = reach_components(frame)
    event = frozenset(event)
    return frozenset(w for w in frame.worlds if comp[w] <= event)


def common_know_iterated(frame: KripkeFrame, event: Event) -> Event:
    """Fixpoint of repeated mutual knowledge; independent route used to
    cross-check :func:`common_know`."""
    # each K_p(E) is a subset of E, so the MK chain is decreasing and the
    # intersection over i >= 1 is reached as soon as one step is stationary
    current = mutual_know(frame, frozenset(event))
    while True:
        nxt = mutual_know(frame, current)
        if nxt == current:
            return current
        current = nxt


def reach_components(frame: KripkeFrame) -> Dict[str, FrozenSet[str]]:
    """Component of each world under the union of all players' classes."""
    parent = {w: w for w in frame.worlds}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for classes in frame.partitions.values():
        for cls in classes:
            it = iter(cls)
            first = find(next(it))
            for w in it:
                parent[find(w)] = first
    groups: Dict[str, set] = {}
    for w in frame.worlds:
        groups.setdefault(find(w), set()).add(w)
    return {w: frozenset(groups[find(w)]) for w in frame.worlds}


# ---------------------------------------------------------------------------
# models over strategy profiles

@dataclass(frozen=True)
class EpistemicModel:
    frame: KripkeFrame
    assignment: Mapping[str, PositionalProfile]


def make_model(frame: KripkeFrame, assignment: Mapping[str, PositionalProfile]) -> EpistemicModel:
    """Validate that each player keeps the same strategy across the worlds
    she cannot distinguish."""
    for w in frame.worlds:
        if w not in assignment:
            raise GameError(f"world {w!r} has no strategy profile assigned")
    for p, classes in frame.partitions.items():
        for cls in classes:
            strategies = {assignment[w].strategy(p) for w in cls}
            if len(strategies) > 1:
                raise GameError(
                    f"player {p!r} plays differently across indistinguishable worlds {sorted(cls)}")
    return EpistemicModel(frame, dict(assignment))


def rational_worlds(arena: Arena, objectives: Mapping[object, Formula],
                    model: EpistemicModel, player) -> Event:
    """Worlds where the player is rational: no alternative positional
    strategy that never hurts her across her indistinguishability class
    and strictly helps somewhere in it.
    """
    sigma = model.assignment
    rational = set()
    for cls in model.frame.partitions[player]:
        status = {}
        for w in cls:
            status[w] = player in winners(arena, objectives, sigma[w])
        improving = False
        for alt in enumerate_strategies(arena, player):
            never_hurts = True
            strictly_helps = False
            for w in cls:
                wins_after = player in winners(
                    arena, objectives, deviate(sigma[w], player, alt))
                if status[w] and not wins_after:
                    never_hurts = False
                    break
                if not status[w] and wins_after:
                    strictly_helps = True
            if never_hurts and strictly_helps:
                improving = True
                break
        if not improving:
            rational |= cls
    return frozenset(rational)


def rational_all(arena: Arena, objectives: Mapping[object, Formula],
                 model: EpistemicModel) -> Event:
    acc = frozenset(model.frame.worlds)
    for p in model.frame.partitions:
        acc &= rational_worlds(arena, objectives, model, p)
    return acc


def canonical_model(arena: Arena, profiles: Iterable[PositionalProfile]) -> EpistemicModel:
    """Model whose worlds are the given profiles themselves: identity
    labeling, and the coarsest per-player relation compatible with the
    labeling (worlds are indistinguishable to p iff p's own strategy
    agrees).  World names are the serialized profiles.
    """
    profiles = sorted(set(profiles), key=lambda s: sort_key(arena, s))
    if not profiles:
        raise EmptySet("canonical model needs at least one profile")
    names = {profile_key(s, arena): s for s in profiles}
    worlds = [profile_key(s, arena) for s in profiles]
    partitions = {}
    for p in arena.players:
        groups: Dict[object, list] = {}
        for w in worlds:
            groups.setdefault(names[w].strategy(p), []).append(w)
        partitions[p] = [frozenset(g) for g in groups.values()]
    frame = make_frame(worlds, partitions)
    return make_model(frame, names)

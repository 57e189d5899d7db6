"""Positional strategies, profile enumeration, deviations and Nash checks."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Optional, Tuple

from .arena import Arena, outcome
from .errors import CountOverflow, PlayerMismatch, UnknownVertex
from .formulas import Formula, eval_muller, winners

#: profiles beyond this are refused, never silently truncated
DEFAULT_CAP = 2 ** 24


@dataclass(frozen=True)
class PositionalStrategy:
    """One successor choice per owned vertex; ``choice`` is kept in arena
    vertex order so strategies compare and hash deterministically."""

    player: object
    choice: Tuple[Tuple[str, str], ...]

    @classmethod
    def make(cls, arena: Arena, player, mapping: Mapping[str, str]) -> "PositionalStrategy":
        owned = arena.owned_by(player)
        pairs = []
        for v in owned:
            if v not in mapping:
                raise UnknownVertex(v)
            if mapping[v] not in arena.successors(v):
                raise UnknownVertex(mapping[v])
            pairs.append((v, mapping[v]))
        extra = set(mapping) - set(owned)
        if extra:
            raise PlayerMismatch(f"vertices {sorted(extra)} not owned by {player!r}")
        return cls(player, tuple(pairs))

    def as_dict(self) -> dict:
        return dict(self.choice)


@dataclass(frozen=True)
class PositionalProfile:
    """One positional strategy per player, in arena player order."""

    strategies: Tuple[PositionalStrategy, ...]

    def strategy(self, player) -> PositionalStrategy:
        for s in self.strategies:
            if s.player == player:
                return s
        raise PlayerMismatch(f"no strategy for player {player!r}")

    @cached_property
    def _vertex_map(self) -> dict:
        m = {}
        for s in self.strategies:
            m.update(s.choice)
        return m

    def as_vertex_map(self) -> Mapping[str, str]:
        return self._vertex_map


def profile_count(arena: Arena) -> int:
    return math.prod(len(arena.successors(v)) for v in arena.vertices)


def _profile_from_choice(arena: Arena, choice: Mapping[str, str]) -> PositionalProfile:
    return PositionalProfile(tuple(
        PositionalStrategy(p, tuple((v, choice[v]) for v in arena.owned_by(p)))
        for p in arena.players))


def enumerate_profiles(arena: Arena, cap: int = DEFAULT_CAP) -> Iterator[PositionalProfile]:
    """All positional profiles in lexicographic order of per-vertex
    successor choices (vertex and successor declaration order)."""
    count = profile_count(arena)
    if count > cap:
        raise CountOverflow(count, cap)
    options = [arena.successors(v) for v in arena.vertices]
    for picks in itertools.product(*options):
        choice = dict(zip(arena.vertices, picks))
        yield _profile_from_choice(arena, choice)


def enumerate_strategies(arena: Arena, player, cap: int = DEFAULT_CAP) -> Iterator[PositionalStrategy]:
    """All positional strategies of one player, lexicographic."""
    owned = arena.owned_by(player)
    count = math.prod(len(arena.successors(v)) for v in owned)
    if count > cap:
        raise CountOverflow(count, cap)
    for picks in itertools.product(*(arena.successors(v) for v in owned)):
        yield PositionalStrategy(player, tuple(zip(owned, picks)))


def sort_key(arena: Arena, profile: PositionalProfile) -> Tuple[int, ...]:
    """Position of a profile in enumeration order (per-vertex successor
    indices); used wherever a deterministic order over profiles is needed."""
    m = profile.as_vertex_map()
    return tuple(arena.successors(v).index(m[v]) for v in arena.vertices)


def deviate(profile: PositionalProfile, player, replacement: PositionalStrategy) -> PositionalProfile:
    """Profile with ``player``'s strategy replaced; the original is unchanged."""
    if replacement.player != player:
        raise PlayerMismatch(
            f"strategy of player {replacement.player!r} used as deviation for {player!r}")
    return PositionalProfile(tuple(
        replacement if s.player == player else s for s in profile.strategies))


def is_nash(arena: Arena, objectives: Mapping[object, Formula],
            profile: PositionalProfile, cap: int = DEFAULT_CAP):
    """Nash check over positional deviations.

    Returns ``(True, None)`` or ``(False, (player, strategy))`` with the
    lexicographically first deviation that turns the player from loser
    into winner.
    """
    won = winners(arena, objectives, profile)
    for p in arena.players:
        if p in won:
            continue
        for alt in enumerate_strategies(arena, p, cap):
            if p in winners(arena, objectives, deviate(profile, p, alt)):
                return False, (p, alt)
    return True, None


def has_winning_strategy(arena: Arena, objectives: Mapping[object, Formula],
                         player, cap: int = DEFAULT_CAP) -> Optional[PositionalStrategy]:
    """First positional strategy with which ``player`` wins against every
    combination of the opponents' positional choices, or ``None``.
    """
    others = [v for v in arena.vertices if arena.owner[v] != player]
    opp_count = math.prod(len(arena.successors(v)) for v in others)
    own_count = math.prod(len(arena.successors(v)) for v in arena.owned_by(player))
    if opp_count * own_count > cap:
        raise CountOverflow(opp_count * own_count, cap)
    objective = objectives[player]
    for mine in enumerate_strategies(arena, player, cap):
        base = dict(mine.choice)
        wins_always = True
        for picks in itertools.product(*(arena.successors(v) for v in others)):
            choice = dict(zip(others, picks))
            choice.update(base)
            if not eval_muller(objective, outcome(arena, choice)):
                wins_always = False
                break
        if wins_always:
            return mine
    return None


def serialize_profile(profile: PositionalProfile, arena: Arena) -> str:
    """Witness format: one line ``<player>: <vertex> -> <vertex>`` per
    choice, in arena vertex order."""
    m = profile.as_vertex_map()
    lines = [f"{arena.owner[v]}: {v} -> {m[v]}" for v in arena.vertices]
    return "\n".join(lines)


def profile_key(profile: PositionalProfile, arena: Arena) -> str:
    """Compact one-line identifier (used as canonical-model world names)."""
    m = profile.as_vertex_map()
    return " ".join(f"{arena.owner[v]}:{v}->{m[v]}" for v in arena.vertices)


def parse_profile(text: str, arena: Arena) -> PositionalProfile:
    """Inverse of :func:`serialize_profile` (player prefix is checked)."""
    choice = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, rest = line.split(":", 1)
            src, dst = rest.split("->")
        except ValueError:
            raise PlayerMismatch(f"malformed profile line: {raw!r}")
        src, dst = src.strip(), dst.strip()
        if src not in arena.vertices:
            raise UnknownVertex(src)
        if dst not in arena.successors(src):
            raise UnknownVertex(dst)
        if str(arena.owner[src]) != head.strip():
            raise PlayerMismatch(f"vertex {src!r} is not owned by player {head.strip()!r}")
        choice[src] = dst
    missing = [v for v in arena.vertices if v not in choice]
    if missing:
        raise UnknownVertex(missing[0])
    return _profile_from_choice(arena, choice)

"""Common knowledge of rationality over positional profiles.

The full characterization is computed by iterated deletion of inferior
profiles (IDIP): starting from all positional profiles, every round
simultaneously removes the profiles that are inferior relative to the
current pool, until nothing changes.  The surviving set is exactly the
set of profiles realizable at some world where everyone's rationality is
common knowledge.

Membership under a bounded model size is a separate question and is
decided either exactly (exhaustive search over models up to the bound) or
by the cheaper one-sided search over canonical models only.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from .arena import Arena
from .epistemic import (EpistemicModel, canonical_model, common_know,
                        make_frame, make_model, rational_all)
from .errors import CountOverflow, InvalidBound
from .formulas import Formula, winners
from .strategy import (DEFAULT_CAP, PositionalProfile, PositionalStrategy,
                       deviate, enumerate_profiles, enumerate_strategies,
                       profile_key, sort_key)


@dataclass(frozen=True)
class IdipRound:
    survivors: Tuple[PositionalProfile, ...]
    removed: Tuple[Tuple[PositionalProfile, Tuple[object, PositionalStrategy]], ...]


@dataclass(frozen=True)
class IdipTrace:
    rounds: Tuple[IdipRound, ...]


@dataclass(frozen=True)
class CkrMembership:
    profile: PositionalProfile
    member: bool
    model: Optional[EpistemicModel] = None
    world: Optional[str] = None
    one_sided: bool = False  # canonical-only search exhausted without a hit


def is_inferior(arena: Arena, objectives: Mapping[object, Formula],
                pool: Sequence[PositionalProfile], profile: PositionalProfile,
                ) -> Optional[Tuple[object, PositionalStrategy]]:
    """Witness (player, strategy) making ``profile`` inferior relative to
    ``pool``, or ``None``.

    A witness strategy must turn the player from loser to winner on this
    profile, and must never turn her from winner to loser on any pool
    profile where she plays the same strategy.
    """
    for p in arena.players:
        if p in winners(arena, objectives, profile):
            continue
        own = profile.strategy(p)
        peers = [s for s in pool if s.strategy(p) == own]
        for alt in enumerate_strategies(arena, p):
            if p not in winners(arena, objectives, deviate(profile, p, alt)):
                continue
            safe = True
            for peer in peers:
                if p in winners(arena, objectives, peer) and \
                        p not in winners(arena, objectives, deviate(peer, p, alt)):
                    safe = False
                    break
            if safe:
                return (p, alt)
    return None


def idip(arena: Arena, objectives: Mapping[object, Formula],
         cap: int = DEFAULT_CAP) -> Tuple[Tuple[PositionalProfile, ...], IdipTrace]:
    """Greatest fixpoint of simultaneous inferior-profile deletion.

    The final recorded round removes nothing; survivor order is the
    profile enumeration order throughout.
    """
    pool: List[PositionalProfile] = list(enumerate_profiles(arena, cap))
    rounds = []
    while True:
        removed = []
        survivors = []
        for s in pool:
            witness = is_inferior(arena, objectives, pool, s)
            if witness is None:
                survivors.append(s)
            else:
                removed.append((s, witness))
        rounds.append(IdipRound(tuple(survivors), tuple(removed)))
        if not removed:
            return tuple(survivors), IdipTrace(tuple(rounds))
        pool = survivors


def in_T(arena: Arena, objectives: Mapping[object, Formula],
         profile: PositionalProfile, cap: int = DEFAULT_CAP) -> CkrMembership:
    """Membership in the full characterization, with a canonical-model
    certificate on success."""
    survivors, _ = idip(arena, objectives, cap)
    if profile not in survivors:
        return CkrMembership(profile, False)
    model = canonical_model(arena, survivors)
    return CkrMembership(profile, True, model, profile_key(profile, arena))


def _refinements(equal_classes: Sequence[frozenset]) -> Iterable[Tuple[frozenset, ...]]:
    """All partitions refining the given partition (product of the set
    partitions of each class)."""
    per_class = [list(_set_partitions(sorted(cls))) for cls in equal_classes]
    for combo in itertools.product(*per_class):
        yield tuple(frozenset(c) for part in combo for c in part)


def _set_partitions(items: Sequence) -> Iterable[List[Tuple]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + (first,)] + part[i + 1:]
        yield part + [(first,)]


def _certified(arena, objectives, model, world) -> bool:
    rat = rational_all(arena, objectives, model)
    return world in common_know(model.frame, rat)


def in_T_P(arena: Arena, objectives: Mapping[object, Formula],
           profile: PositionalProfile, world_bound: int, mode: str = "exact",
           cap: int = DEFAULT_CAP, search_cap: int = 2 ** 20) -> CkrMembership:
    """Membership witnessed by an epistemic model with at most
    ``world_bound`` worlds.

    ``exact`` mode searches all models up to the bound (assignments into
    the positional profiles, per-player partitions refining the
    strategy-equality partition) and is a complete decision.
    ``canonical`` mode only tries canonical models of profile subsets
    containing the profile; its certificates are always valid but a miss
    is reported one-sided, not as a refutation.
    """
    if world_bound < 1:
        raise InvalidBound(f"world bound must be >= 1, got {world_bound}")
    if mode not in ("exact", "canonical"):
        raise InvalidBound(f"unknown mode {mode!r}")

    all_profiles = list(enumerate_profiles(arena, cap))
    others = [s for s in all_profiles if s != profile]

    if mode == "canonical":
        total = sum(math.comb(len(others), k)
                    for k in range(0, min(world_bound, len(others) + 1)))
        if total > search_cap:
            raise CountOverflow(total, search_cap)
        for k in range(0, min(world_bound - 1, len(others)) + 1):
            for extra in itertools.combinations(others, k):
                model = canonical_model(arena, (profile,) + extra)
                world = profile_key(profile, arena)
                if _certified(arena, objectives, model, world):
                    return CkrMembership(profile, True, model, world)
        return CkrMembership(profile, False, one_sided=True)

    # exact mode: worlds w0..w{m-1}, w0 labeled by the target profile; the
    # remaining labels are a nondecreasing tuple of profiles (world names
    # carry no information beyond their label and class signature, so
    # ordered duplicates of the search are skipped)
    n = len(all_profiles)
    sigma_count = sum(math.comb(n + m - 2, m - 1) for m in range(1, world_bound + 1))
    if sigma_count * _bell(world_bound) ** len(arena.players) > search_cap:
        raise CountOverflow(sigma_count * _bell(world_bound) ** len(arena.players), search_cap)
    for m in range(1, world_bound + 1):
        for labels in itertools.combinations_with_replacement(all_profiles, m - 1):
            sigma = [profile] + list(labels)
            worlds = [f"w{i}" for i in range(m)]
            assignment = dict(zip(worlds, sigma))
            per_player = []
            for p in arena.players:
                groups: dict = {}
                for w in worlds:
                    groups.setdefault(assignment[w].strategy(p), []).append(w)
                equal = [frozenset(g) for g in groups.values()]
                per_player.append(list(_refinements(equal)))
            for combo in itertools.product(*per_player):
                frame = make_frame(worlds, dict(zip(arena.players, combo)))
                model = make_model(frame, assignment)
                if _certified(arena, objectives, model, "w0"):
                    return CkrMembership(profile, True, model, "w0")
    return CkrMembership(profile, False)


def _bell(n: int) -> int:
    # Bell numbers via the triangle; n stays tiny here
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]

"""Top-level decision procedures with witness reporting.

Each "no" answer carries a refuting profile together with everything a
reviewer needs to re-validate it from scratch: its lasso, and for the
CKR-based problems a membership certificate (epistemic model + world).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .arena import Arena, Lasso, outcome
from .ckr import CkrMembership, idip, in_T_P
from .epistemic import canonical_model
from .errors import InvalidBound
from .formulas import Formula, eval_muller
from .strategy import (DEFAULT_CAP, PositionalProfile, enumerate_profiles,
                       is_nash, profile_key)


@dataclass(frozen=True)
class Witness:
    profile: PositionalProfile
    lasso: Lasso
    membership: Optional[CkrMembership] = None


@dataclass(frozen=True)
class Verdict:
    answer: bool
    witness: Optional[Witness] = None
    one_sided: bool = False  # canonical-only "yes*": search exhausted, not a proof
    stats: Mapping[str, int] = field(default_factory=dict)


def sver(arena: Arena, profile: PositionalProfile, spec: Formula) -> bool:
    """Does the outcome of this single profile satisfy the specification?
    Linear in the play prefix plus one formula evaluation."""
    return eval_muller(spec, outcome(arena, profile))


def vp_nash_pos(arena: Arena, objectives: Mapping[object, Formula], spec: Formula,
                cap: int = DEFAULT_CAP) -> Verdict:
    """Does every positional Nash equilibrium satisfy the specification?"""
    examined = 0
    for profile in enumerate_profiles(arena, cap):
        examined += 1
        if sver(arena, profile, spec):
            continue
        nash, _ = is_nash(arena, objectives, profile, cap)
        if nash:
            return Verdict(False, Witness(profile, outcome(arena, profile)),
                           stats={"profiles": examined})
    return Verdict(True, stats={"profiles": examined})


def vpckr_pos(arena: Arena, objectives: Mapping[object, Formula], spec: Formula,
              cap: int = DEFAULT_CAP) -> Verdict:
    """Does every profile consistent with common knowledge of rationality
    satisfy the specification?  Decided through the IDIP fixpoint."""
    survivors, trace = idip(arena, objectives, cap)
    stats = {"profiles": sum(len(r.survivors) + len(r.removed) for r in trace.rounds[:1]),
             "rounds": len(trace.rounds),
             "surviving": len(survivors)}
    if not survivors:
        stats["empty_characterization"] = 1
        return Verdict(True, stats=stats)
    model = None
    for profile in survivors:
        if not sver(arena, profile, spec):
            if model is None:
                model = canonical_model(arena, survivors)
            membership = CkrMembership(profile, True, model, profile_key(profile, arena))
            return Verdict(False, Witness(profile, outcome(arena, profile), membership),
                           stats=stats)
    return Verdict(True, stats=stats)


def vpckr_p_pos(arena: Arena, objectives: Mapping[object, Formula], spec: Formula,
                world_bound: Optional[int] = None, mode: str = "exact",
                cap: int = DEFAULT_CAP, search_cap: int = 2 ** 20) -> Verdict:
    """Does every profile realizable in a rationality-certifying epistemic
    model of at most ``world_bound`` worlds satisfy the specification?

    The default bound is |V| * |P|.  In canonical mode a "yes" is
    one-sided (only canonical models were searched).
    """
    if world_bound is None:
        world_bound = len(arena.vertices) * len(arena.players)
    if world_bound < 1:
        raise InvalidBound(f"world bound must be >= 1, got {world_bound}")
    examined = 0
    searched = 0
    for profile in enumerate_profiles(arena, cap):
        examined += 1
        if sver(arena, profile, spec):
            continue
        searched += 1
        membership = in_T_P(arena, objectives, profile, world_bound, mode,
                            cap=cap, search_cap=search_cap)
        if membership.member:
            return Verdict(False, Witness(profile, outcome(arena, profile), membership),
                           stats={"profiles": examined, "models_searched": searched})
    return Verdict(True, one_sided=(mode == "canonical" and searched > 0),
                   stats={"profiles": examined, "models_searched": searched})

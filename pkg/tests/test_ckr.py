import itertools
import random

import pytest

from ratverify.ckr import idip, in_T, in_T_P, is_inferior
from ratverify.epistemic import (canonical_model, common_know, make_frame,
                                 make_model, rational_all)
from ratverify.errors import InvalidBound
from ratverify.formulas import parse_formula, winners
from ratverify.reductions import build_easat_instance, build_sat_instance, make_qbf
from ratverify.strategy import (enumerate_profiles, has_winning_strategy,
                                is_nash, profile_key)

from gamegen import random_arena, random_objectives
from conftest import rotation_profile


def sat_instance(text):
    return build_sat_instance(parse_formula(text))


def profile_choosing(arena, picks):
    for profile in enumerate_profiles(arena):
        m = profile.as_vertex_map()
        if all(m[v] == d for v, d in picks.items()):
            return profile
    raise AssertionError("no such profile")


class TestIsInferior:
    def test_losing_profile_in_single_player_arena(self):
        arena, objectives, _ = sat_instance("x1")
        pool = list(enumerate_profiles(arena))
        loser = profile_choosing(arena, {"v1": "nx1"})
        witness = is_inferior(arena, objectives, pool, loser)
        assert witness is not None
        player, alt = witness
        assert dict(alt.choice)["v1"] == "x1"

    def test_all_winners_never_inferior(self):
        rng = random.Random(47)
        for _ in range(20):
            arena = random_arena(rng)
            objectives = random_objectives(rng, arena)
            pool = list(enumerate_profiles(arena))
            for profile in pool:
                if winners(arena, objectives, profile) == frozenset(arena.players):
                    assert is_inferior(arena, objectives, pool, profile) is None

    def test_no_inferiority_when_own_strategy_is_irrelevant(self, triangle,
                                                            buchi_own):
        pool = list(enumerate_profiles(triangle))
        for profile in pool:
            assert is_inferior(triangle, buchi_own, pool, profile) is None


class TestIdip:
    def test_own_vertex_objectives_keep_everything(self, triangle, buchi_own):
        survivors, trace = idip(triangle, buchi_own)
        assert len(survivors) == 8
        assert len(trace.rounds) == 1
        assert trace.rounds[-1].removed == ()

    def test_satisfiable_formula_keeps_exactly_models(self):
        arena, objectives, _ = sat_instance("x1 | !x2")
        survivors, _ = idip(arena, objectives)
        keys = {frozenset(s.as_vertex_map()[v] for v in ("v1", "v2"))
                for s in survivors}
        # satisfying assignments of x1 | !x2: 11, 10, 00
        assert keys == {frozenset({"x1", "x2"}), frozenset({"x1", "nx2"}),
                        frozenset({"nx1", "nx2"})}

    def test_zero_sum_draw_leaves_existential_loss(self):
        # neither side can force y1 <-> x1 nor its negation
        qbf = make_qbf([("exists", ["y1"]), ("forall", ["x1"])],
                       parse_formula("(y1 & x1) | (!y1 & !x1)"))
        arena, objectives, spec = build_easat_instance(qbf)
        assert has_winning_strategy(arena, objectives, "E") is None
        assert has_winning_strategy(arena, objectives, "A") is None
        survivors, _ = idip(arena, objectives)
        from ratverify.verify import sver
        assert any(not sver(arena, s, spec) for s in survivors)

    def test_rounds_decrease_until_fixpoint(self):
        rng = random.Random(53)
        for _ in range(40):
            arena = random_arena(rng)
            objectives = random_objectives(rng, arena)
            survivors, trace = idip(arena, objectives)
            sizes = [len(r.survivors) for r in trace.rounds]
            # strict decrease in every round except the final, empty one
            assert all(a > b for a, b in zip(sizes[:-1], sizes[1:-1]))
            if len(sizes) > 1:
                assert sizes[-1] == sizes[-2]
            assert trace.rounds[-1].removed == ()
            assert tuple(trace.rounds[-1].survivors) == survivors


class TestInT:
    def test_s3_is_member(self, triangle, buchi_own):
        result = in_T(triangle, buchi_own, rotation_profile("RRL"))
        assert result.member
        assert result.world == profile_key(rotation_profile("RRL"), triangle)
        # certificate re-validates
        rat = rational_all(triangle, buchi_own, result.model)
        assert result.world in common_know(result.model.frame, rat)

    def test_every_nash_is_member(self):
        rng = random.Random(59)
        for _ in range(25):
            arena = random_arena(rng)
            objectives = random_objectives(rng, arena)
            for profile in enumerate_profiles(arena):
                if is_nash(arena, objectives, profile)[0]:
                    assert in_T(arena, objectives, profile).member

    def test_refuted_assignment_not_member(self):
        arena, objectives, _ = sat_instance("x1")
        loser = profile_choosing(arena, {"v1": "nx1"})
        assert not in_T(arena, objectives, loser).member


class TestInTP:
    def test_invalid_inputs(self, triangle, buchi_own):
        profile = rotation_profile("RRR")
        with pytest.raises(InvalidBound):
            in_T_P(triangle, buchi_own, profile, 0)
        with pytest.raises(InvalidBound):
            in_T_P(triangle, buchi_own, profile, 1, mode="fancy")

    def test_nash_member_with_singleton_certificate(self, triangle, buchi_next):
        result = in_T_P(triangle, buchi_next, rotation_profile("LLL"), 1)
        assert result.member
        assert len(result.model.frame.worlds) == 1

    def test_all_profiles_member_at_bound_one(self, triangle, buchi_own):
        for profile in enumerate_profiles(triangle):
            assert is_nash(triangle, buchi_own, profile)[0]
            assert in_T_P(triangle, buchi_own, profile, 1).member

    def test_hopeless_loser_is_rational(self):
        arena, objectives, _ = sat_instance("x1 & !x1")
        for profile in enumerate_profiles(arena):
            assert in_T_P(arena, objectives, profile, 1).member

    def test_exact_bound_one_agrees_with_nash(self):
        rng = random.Random(61)
        for _ in range(25):
            arena = random_arena(rng, max_profiles=8)
            objectives = random_objectives(rng, arena)
            for profile in enumerate_profiles(arena):
                nash = is_nash(arena, objectives, profile)[0]
                assert in_T_P(arena, objectives, profile, 1).member == nash

    def test_canonical_certificates_confirmed_by_exact(self):
        rng = random.Random(67)
        for _ in range(20):
            arena = random_arena(rng, max_profiles=8)
            objectives = random_objectives(rng, arena)
            for profile in enumerate_profiles(arena):
                for bound in (1, 2):
                    canon = in_T_P(arena, objectives, profile, bound,
                                   mode="canonical")
                    if canon.member:
                        assert in_T_P(arena, objectives, profile, bound).member
                    else:
                        assert canon.one_sided

    def test_exact_agrees_with_unpruned_search(self):
        rng = random.Random(71)
        for _ in range(8):
            arena = random_arena(rng, max_vertices=3, max_profiles=4)
            objectives = random_objectives(rng, arena)
            for profile in enumerate_profiles(arena):
                expected = unpruned_bounded_membership(arena, objectives,
                                                      profile, 2)
                assert in_T_P(arena, objectives, profile, 2).member == expected


class TestStructure:
    def test_canonical_worlds_lie_in_ck_rat(self):
        rng = random.Random(73)
        for _ in range(30):
            arena = random_arena(rng)
            objectives = random_objectives(rng, arena)
            survivors, _ = idip(arena, objectives)
            if not survivors:
                continue
            model = canonical_model(arena, survivors)
            rat = rational_all(arena, objectives, model)
            ck = common_know(model.frame, rat)
            assert ck == frozenset(model.frame.worlds)

    def test_winning_strategy_implies_winning_everywhere_in_fixpoint(self):
        rng = random.Random(79)
        checked = 0
        for _ in range(40):
            arena = random_arena(rng)
            objectives = random_objectives(rng, arena)
            for p in arena.players:
                if has_winning_strategy(arena, objectives, p) is None:
                    continue
                survivors, _ = idip(arena, objectives)
                for s in survivors:
                    assert p in winners(arena, objectives, s)
                    checked += 1
        assert checked > 0

    def test_inclusion_chain(self):
        rng = random.Random(83)
        for _ in range(15):
            arena = random_arena(rng, max_profiles=8)
            objectives = random_objectives(rng, arena)
            survivors, _ = idip(arena, objectives)
            for profile in enumerate_profiles(arena):
                if is_nash(arena, objectives, profile)[0]:
                    assert in_T_P(arena, objectives, profile, 1).member
                if in_T_P(arena, objectives, profile, 1).member:
                    assert profile in survivors


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield part + [[first]]


def unpruned_bounded_membership(arena, objectives, profile, bound):
    """Raw search over every model up to the bound: all ordered label
    tuples, all per-player partitions, no symmetry breaking."""
    all_profiles = list(enumerate_profiles(arena))
    for m in range(1, bound + 1):
        for labels in itertools.product(all_profiles, repeat=m):
            if profile not in labels:
                continue
            worlds = [f"w{i}" for i in range(m)]
            assignment = dict(zip(worlds, labels))
            per_player = []
            ok = True
            for p in arena.players:
                parts = []
                for part in set_partitions(worlds):
                    if all(len({assignment[w].strategy(p) for w in cls}) == 1
                           for cls in part):
                        parts.append(part)
                per_player.append(parts)
            for combo in itertools.product(*per_player):
                frame = make_frame(worlds, dict(zip(arena.players, combo)))
                model = make_model(frame, assignment)
                rat = rational_all(arena, objectives, model)
                ck = common_know(frame, rat)
                for w in worlds:
                    if assignment[w] == profile and w in ck:
                        return True
    return False

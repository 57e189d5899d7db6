"""Walk-through: common knowledge of rationality vs. Nash equilibrium.

Same triangle arena as demo 01, but now player p wants to revisit *their
own* vertex.  Under that objective every profile survives inferior-profile
deletion, so verifying a property against all commonly-known-rational
profiles is strictly harder than verifying it against Nash equilibria.
"""

from ratverify import (buchi_to_muller, canonical_model, common_know, idip,
                       is_nash, parse_formula, rational_all, validate_arena,
                       vpckr_pos, vp_nash_pos, enumerate_profiles,
                       serialize_profile)

arena = validate_arena(
    players=(0, 1, 2),
    vertices=("v0", "v1", "v2"),
    owner={"v0": 0, "v1": 1, "v2": 2},
    initial="v0",
    edges=[("v0", "v2"), ("v0", "v1"),
           ("v1", "v0"), ("v1", "v2"),
           ("v2", "v1"), ("v2", "v0")])
objectives = {p: buchi_to_muller({f"v{p}"}, arena) for p in arena.players}

# --- inferior-profile deletion --------------------------------------------

survivors, trace = idip(arena, objectives)
print(f"{len(list(enumerate_profiles(arena)))} profiles,"
      f" {len(survivors)} survive deletion"
      f" in {len(trace.rounds)} round(s)")

# the canonical model over the survivors certifies every one of them:
# in it, rationality is common knowledge at every world
model = canonical_model(arena, survivors)
rational = rational_all(arena, objectives, model)
certified = common_know(model.frame, rational)
print("worlds where rationality is common knowledge:",
      len(certified), "of", len(model.frame.worlds))

# --- the two verification questions ---------------------------------------

spec = parse_formula("v0 & v1 & v2")   # every vertex visited infinitely often

nash = vp_nash_pos(arena, objectives, spec)
print("\nevery Nash equilibrium satisfies the spec:", nash.answer)

ckr = vpckr_pos(arena, objectives, spec)
print("every commonly-known-rational profile satisfies it:", ckr.answer)
if not ckr.answer:
    w = ckr.witness
    print("counterexample profile:")
    for line in serialize_profile(w.profile, arena).splitlines():
        print("   ", line)
    print("its play loops on:", " ".join(w.lasso.cycle))
    print("is it a Nash equilibrium?", is_nash(arena, objectives, w.profile)[0])

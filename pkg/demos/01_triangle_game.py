"""Walk-through: three players on a triangle.

Each player owns one vertex of a triangle and, whenever play reaches it,
sends the token to one of the other two corners.  Player p wants the play
to visit v_{p+1} infinitely often.  We build the arena, look at two
profiles, and check which one is a Nash equilibrium.
"""

from ratverify import (buchi_to_muller, is_nash, outcome, parse_profile,
                       validate_arena, winners)

# --- the arena -------------------------------------------------------------

arena = validate_arena(
    players=(0, 1, 2),
    vertices=("v0", "v1", "v2"),
    owner={"v0": 0, "v1": 1, "v2": 2},
    initial="v0",
    edges=[("v0", "v2"), ("v0", "v1"),
           ("v1", "v0"), ("v1", "v2"),
           ("v2", "v1"), ("v2", "v0")])

objectives = {p: buchi_to_muller({f"v{(p + 1) % 3}"}, arena)
              for p in arena.players}
print("objectives:", {p: str(f) for p, f in objectives.items()})

# --- a cooperative profile -------------------------------------------------

# everyone pushes the token counterclockwise: v0 -> v1 -> v2 -> v0 -> ...
s = parse_profile("0: v0 -> v1\n1: v1 -> v2\n2: v2 -> v0", arena)
lasso = outcome(arena, s)
print("\ncooperative profile")
print("  play:", " ".join(lasso.prefix), "(", " ".join(lasso.cycle), ")^w")
print("  winners:", sorted(winners(arena, objectives, s)))
print("  nash:", is_nash(arena, objectives, s)[0])

# --- a spiteful profile ----------------------------------------------------

# player 1 sends the token straight back; the play never reaches v2
sp = parse_profile("0: v0 -> v1\n1: v1 -> v0\n2: v2 -> v0", arena)
lasso = outcome(arena, sp)
print("\nspiteful profile")
print("  play: (", " ".join(lasso.cycle), ")^w")
print("  winners:", sorted(winners(arena, objectives, sp)))
ok, deviation = is_nash(arena, objectives, sp)
print("  nash:", ok)
if not ok:
    player, alt = deviation
    print("  profitable deviation for player", player, "->", alt.as_dict())

"""Walk-through: encoding quantified Boolean formulas as verification games.

The hardness constructions double as handy test-case generators: a QBF is
compiled into a two-player chain arena whose verification verdict equals
the formula's truth value.  We run the pipeline both ways and cross-check
against brute-force evaluation.
"""

from ratverify import (build_aesat_instance, build_easat_instance,
                       build_sat_instance, parse_formula, parse_qbf,
                       qbf_eval, serialize_problem, Problem,
                       vp_nash_pos, vpckr_pos, vpckr_p_pos)

# --- forall/exists: true iff every Nash equilibrium satisfies the spec -----

qbf = parse_qbf("forall x1 x2\nexists y1\n(x1 | y1) & (x2 | !y1)\n")
arena, objectives, spec = build_aesat_instance(qbf)
print("forall x1 x2 exists y1 . (x1 | y1) & (x2 | !y1)")
print("  chain arena:", " ".join(arena.vertices))
print("  brute force:", qbf_eval(qbf))
print("  via vp-nash:", vp_nash_pos(arena, objectives, spec).answer)

# the instance serializes to the problem-file format understood by the CLI
print("\nas a problem file:")
for line in serialize_problem(Problem(arena, objectives, spec)).splitlines():
    print("   ", line)

# --- exists/forall: compiled into a zero-sum game, decided by vp-ckr -------

qbf = parse_qbf("exists y1\nforall x1\ny1 | x1\n")
arena, objectives, spec = build_easat_instance(qbf)
print("\nexists y1 forall x1 . y1 | x1")
print("  brute force:", qbf_eval(qbf))
print("  via vp-ckr: ", vpckr_pos(arena, objectives, spec).answer)

# --- plain satisfiability through the single-player bounded variant --------

for text in ("x1 & !x1", "x1 & (x2 | !x1)"):
    matrix = parse_formula(text)
    arena, objectives, spec = build_sat_instance(matrix)
    verdict = vpckr_p_pos(arena, objectives, spec, world_bound=1)
    print(f"\n{text}: satisfiable = {not verdict.answer}")
    if verdict.witness is not None:
        choice = verdict.witness.profile.as_vertex_map()
        literals = sorted(choice[v] for v in choice if v.startswith("v"))
        print("  witness picks the literals:", " ".join(literals))

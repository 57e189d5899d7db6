"""Command-line front end.

Exit codes: 0 = yes, 1 = no (witness on stdout), 2 = input/usage error,
3 = enumeration or search cap exceeded.  ``-`` as a filename reads stdin.
"""

from __future__ import annotations

import argparse
import sys

from .arena import outcome
from .ckr import idip
from .errors import CountOverflow, GameError
from .problem import Problem, parse_problem, serialize_problem
from .reductions import (build_aesat_instance, build_easat_instance,
                         build_sat_instance, parse_qbf, qbf_eval)
from .strategy import parse_profile, serialize_profile
from .verify import sver, vp_nash_pos, vpckr_p_pos, vpckr_pos

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_CAP = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_problem(path: str) -> Problem:
    return parse_problem(_read(path))


def _load_profile(problem: Problem, path: str):
    return parse_profile(_read(path), problem.arena)


def _print_lasso(lasso):
    print("prefix:", " ".join(lasso.prefix))
    print("cycle:", " ".join(lasso.cycle))


def _print_witness(problem, witness):
    print("witness profile:")
    print(serialize_profile(witness.profile, problem.arena))
    _print_lasso(witness.lasso)
    if witness.membership is not None and witness.membership.model is not None:
        m = witness.membership
        print(f"certificate: world {m.world!r} in a model with "
              f"{len(m.model.frame.worlds)} world(s)")


def _print_trace(problem, trace):
    for i, rnd in enumerate(trace.rounds, start=1):
        if not rnd.removed:
            print(f"round {i}: fixpoint, {len(rnd.survivors)} profile(s) remain")
            continue
        print(f"round {i}: removed {len(rnd.removed)} profile(s)")
        for profile, (player, alt) in rnd.removed:
            moves = ", ".join(f"{v} -> {d}" for v, d in alt.choice)
            print(f"  - {_one_line(problem, profile)}  [player {player}: {moves}]")


def _one_line(problem, profile):
    m = profile.as_vertex_map()
    return " ".join(f"{v}->{m[v]}" for v in problem.arena.vertices)


def _cmd_validate(args) -> int:
    _load_problem(args.file)
    print("ok")
    return EXIT_YES


def _cmd_outcome(args) -> int:
    problem = _load_problem(args.file)
    profile = _load_profile(problem, args.profile)
    _print_lasso(outcome(problem.arena, profile))
    return EXIT_YES


def _cmd_sver(args) -> int:
    problem = _load_problem(args.file)
    profile = _load_profile(problem, args.profile)
    ok = sver(problem.arena, profile, problem.spec)
    print("yes" if ok else "no")
    return EXIT_YES if ok else EXIT_NO


def _cmd_nash_check(args) -> int:
    from .strategy import is_nash
    problem = _load_problem(args.file)
    profile = _load_profile(problem, args.profile)
    nash, deviation = is_nash(problem.arena, problem.objectives, profile)
    if nash:
        print("nash")
        return EXIT_YES
    player, alt = deviation
    moves = ", ".join(f"{v} -> {d}" for v, d in alt.choice)
    print(f"not nash: player {player} improves via {moves}")
    return EXIT_NO


def _cmd_vp_nash(args) -> int:
    problem = _load_problem(args.file)
    verdict = vp_nash_pos(problem.arena, problem.objectives, problem.spec)
    if verdict.answer:
        print("yes")
        return EXIT_YES
    print("no")
    _print_witness(problem, verdict.witness)
    return EXIT_NO


def _cmd_vp_ckr(args) -> int:
    problem = _load_problem(args.file)
    if args.trace:
        _, trace = idip(problem.arena, problem.objectives)
        _print_trace(problem, trace)
    verdict = vpckr_pos(problem.arena, problem.objectives, problem.spec)
    if verdict.answer:
        print("yes")
        return EXIT_YES
    print("no")
    _print_witness(problem, verdict.witness)
    return EXIT_NO


def _cmd_vp_ckr_p(args) -> int:
    problem = _load_problem(args.file)
    verdict = vpckr_p_pos(problem.arena, problem.objectives, problem.spec,
                          world_bound=args.bound, mode=args.mode)
    if verdict.answer:
        print("yes*" if verdict.one_sided else "yes")
        return EXIT_YES
    print("no")
    _print_witness(problem, verdict.witness)
    return EXIT_NO


def _cmd_idip(args) -> int:
    problem = _load_problem(args.file)
    survivors, trace = idip(problem.arena, problem.objectives)
    if args.trace:
        _print_trace(problem, trace)
    print(f"{len(survivors)} surviving profile(s):")
    for profile in survivors:
        print(" ", _one_line(problem, profile))
    return EXIT_YES


def _cmd_reduce(args) -> int:
    qbf = parse_qbf(_read(args.qbf))
    if args.kind == "sat":
        arena, objectives, spec = build_sat_instance(qbf.matrix)
    elif args.kind == "aesat":
        arena, objectives, spec = build_aesat_instance(qbf)
    else:
        arena, objectives, spec = build_easat_instance(qbf)
    sys.stdout.write(serialize_problem(Problem(arena, objectives, spec)))
    return EXIT_YES


def _cmd_eval_qbf(args) -> int:
    value = qbf_eval(parse_qbf(_read(args.qbf)))
    print("true" if value else "false")
    return EXIT_YES if value else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratverify",
        description="Rational verification of multiplayer graph games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def game_cmd(name, func, help_text, profile=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="problem file ('-' for stdin)")
        if profile:
            p.add_argument("--profile", required=True,
                           help="positional profile file ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    game_cmd("validate", _cmd_validate, "parse and validate a problem file")
    game_cmd("outcome", _cmd_outcome, "lasso outcome of a profile", profile=True)
    game_cmd("sver", _cmd_sver, "check one profile against the spec", profile=True)
    game_cmd("nash-check", _cmd_nash_check, "is the profile a Nash equilibrium?",
             profile=True)
    game_cmd("vp-nash", _cmd_vp_nash, "do all Nash equilibria satisfy the spec?")
    p = game_cmd("vp-ckr", _cmd_vp_ckr, "do all CKR-consistent profiles satisfy the spec?")
    p.add_argument("--trace", action="store_true", help="print deletion rounds")
    p = game_cmd("vp-ckr-p", _cmd_vp_ckr_p,
                 "CKR verification under a bounded model size")
    p.add_argument("--bound", type=int, default=None, metavar="K",
                   help="maximum number of worlds (default |V|*|P|)")
    p.add_argument("--mode", choices=("exact", "canonical"), default="exact")
    p = game_cmd("idip", _cmd_idip, "iterated deletion of inferior profiles")
    p.add_argument("--trace", action="store_true", help="print deletion rounds")

    p = sub.add_parser("reduce", help="build a problem file from a formula")
    p.add_argument("kind", choices=("sat", "aesat", "easat"))
    p.add_argument("qbf", help="QBF file ('-' for stdin)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("eval-qbf", help="evaluate a QBF by truth-table expansion")
    p.add_argument("qbf", help="QBF file ('-' for stdin)")
    p.set_defaults(func=_cmd_eval_qbf)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CountOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GameError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry() -> None:
    raise SystemExit(run())

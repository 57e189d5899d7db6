"""Problem file parsing and serialization.

Line-oriented format, ``#`` starts a comment:

    players <n>
    vertex <name> owner <player> [initial]
    edge <from> <to>
    objective <player> <formula>
    spec <formula>

Players are the integers 0 .. n-1.  An optional epistemic model section
may follow:

    world <id>
    assign <id> <player> <vertex> -> <vertex>
    class <player> <id> <id> ...

Worlds not listed in any ``class`` line of a player form singleton
classes for that player.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .arena import Arena, validate_arena
from .epistemic import EpistemicModel, make_frame, make_model
from .errors import (GameError, MissingSpec, ProblemSyntaxError, UnknownName)
from .formulas import Formula, check_vocabulary, parse_formula
from .strategy import PositionalProfile, PositionalStrategy
from . import errors


@dataclass(frozen=True)
class Problem:
    arena: Arena
    objectives: Mapping[object, Formula]
    spec: Formula
    model: Optional[EpistemicModel] = None


def _syntax(message, lineno):
    raise ProblemSyntaxError(message, line=lineno, col=1)


def parse_problem(text: str) -> Problem:
    player_count = None
    vertices: List[str] = []
    owner: Dict[str, int] = {}
    initial = None
    edges: List[Tuple[str, str]] = []
    objectives: Dict[int, Formula] = {}
    spec = None

    world_order: List[str] = []
    assigns: Dict[str, Dict[int, Dict[str, str]]] = {}
    classes: Dict[int, List[List[str]]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]

        if head == "players":
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                _syntax("expected: players <n>", lineno)
            player_count = int(parts[1])
        elif head == "vertex":
            if player_count is None:
                _syntax("players must be declared before vertices", lineno)
            if len(parts) not in (4, 5) or parts[2] != "owner":
                _syntax("expected: vertex <name> owner <player> [initial]", lineno)
            name = parts[1]
            if not parts[3].isdigit() or int(parts[3]) >= player_count:
                raise UnknownName(f"unknown player {parts[3]!r}", line=lineno, col=1)
            if name in owner:
                raise errors.DuplicateOwner(name)
            vertices.append(name)
            owner[name] = int(parts[3])
            if len(parts) == 5:
                if parts[4] != "initial":
                    _syntax("expected: vertex <name> owner <player> [initial]", lineno)
                if initial is not None:
                    _syntax("more than one initial vertex", lineno)
                initial = name
        elif head == "edge":
            if len(parts) != 3:
                _syntax("expected: edge <from> <to>", lineno)
            for v in parts[1:]:
                if v not in owner:
                    raise UnknownName(f"unknown vertex {v!r}", line=lineno, col=1)
            edges.append((parts[1], parts[2]))
        elif head == "objective":
            if len(parts) < 3 or not parts[1].isdigit():
                _syntax("expected: objective <player> <formula>", lineno)
            p = int(parts[1])
            if player_count is None or p >= player_count:
                raise UnknownName(f"unknown player {parts[1]!r}", line=lineno, col=1)
            objectives[p] = parse_formula(line.split(None, 2)[2], line=lineno)
        elif head == "spec":
            if len(parts) < 2:
                _syntax("expected: spec <formula>", lineno)
            spec = parse_formula(line.split(None, 1)[1], line=lineno)
        elif head == "world":
            if len(parts) != 2:
                _syntax("expected: world <id>", lineno)
            if parts[1] in world_order:
                _syntax(f"duplicate world {parts[1]!r}", lineno)
            world_order.append(parts[1])
        elif head == "assign":
            if len(parts) != 6 or parts[4] != "->":
                _syntax("expected: assign <world> <player> <vertex> -> <vertex>", lineno)
            w, p_raw, src, _, dst = parts[1:]
            if w not in world_order:
                raise UnknownName(f"unknown world {w!r}", line=lineno, col=1)
            if not p_raw.isdigit() or int(p_raw) >= (player_count or 0):
                raise UnknownName(f"unknown player {p_raw!r}", line=lineno, col=1)
            if src not in owner or dst not in owner:
                raise UnknownName("unknown vertex in assignment", line=lineno, col=1)
            assigns.setdefault(w, {}).setdefault(int(p_raw), {})[src] = dst
        elif head == "class":
            if len(parts) < 3 or not parts[1].isdigit():
                _syntax("expected: class <player> <id> <id> ...", lineno)
            for w in parts[2:]:
                if w not in world_order:
                    raise UnknownName(f"unknown world {w!r}", line=lineno, col=1)
            classes.setdefault(int(parts[1]), []).append(parts[2:])
        else:
            _syntax(f"unknown directive {head!r}", lineno)

    if player_count is None or not vertices:
        _syntax("file declares no arena", 1)
    if initial is None:
        _syntax("no initial vertex declared", 1)
    arena = validate_arena(tuple(range(player_count)), vertices, owner, initial, edges)
    if spec is None:
        raise MissingSpec("problem file has no spec line")
    for p in arena.players:
        if p not in objectives:
            _syntax(f"no objective declared for player {p}", 1)
    for f in (*objectives.values(), spec):
        check_vocabulary(f, arena)

    model = None
    if world_order:
        model = _build_model(arena, world_order, assigns, classes)
    return Problem(arena, objectives, spec, model)


def _build_model(arena, world_order, assigns, classes) -> EpistemicModel:
    assignment = {}
    for w in world_order:
        strategies = []
        for p in arena.players:
            mapping = assigns.get(w, {}).get(p, {})
            strategies.append(PositionalStrategy.make(arena, p, mapping))
        assignment[w] = PositionalProfile(tuple(strategies))
    partitions = {}
    for p in arena.players:
        listed = classes.get(p, [])
        covered = set()
        out = []
        for cls in listed:
            out.append(cls)
            covered |= set(cls)
        for w in world_order:
            if w not in covered:
                out.append([w])
        partitions[p] = out
    frame = make_frame(world_order, partitions)
    return make_model(frame, assignment)


def serialize_problem(problem: Problem) -> str:
    """Inverse of :func:`parse_problem` up to comments and whitespace.
    Player identifiers are emitted as their declaration index."""
    arena = problem.arena
    index = {p: i for i, p in enumerate(arena.players)}
    lines = [f"players {len(arena.players)}"]
    for v in arena.vertices:
        suffix = " initial" if v == arena.initial else ""
        lines.append(f"vertex {v} owner {index[arena.owner[v]]}{suffix}")
    for a, b in arena.edges:
        lines.append(f"edge {a} {b}")
    for p in arena.players:
        lines.append(f"objective {index[p]} {problem.objectives[p]}")
    lines.append(f"spec {problem.spec}")
    if problem.model is not None:
        m = problem.model
        for w in m.frame.worlds:
            lines.append(f"world {w}")
        for w in m.frame.worlds:
            for p in arena.players:
                for src, dst in m.assignment[w].strategy(p).choice:
                    lines.append(f"assign {w} {index[p]} {src} -> {dst}")
        for p in arena.players:
            for cls in m.frame.partitions[p]:
                if len(cls) > 1:
                    ordered = sorted(cls, key=m.frame.worlds.index)
                    lines.append(f"class {index[p]} " + " ".join(ordered))
    return "\n".join(lines) + "\n"

"""Arena builders from Boolean/QBF formulas, plus a brute-force QBF oracle.

Each builder turns a formula into a chain-shaped game in which picking a
successor at a choice vertex fixes the truth value of one variable, so
positional profiles correspond one-to-one to truth assignments and the
matrix, read as a Muller condition over the positive-literal vertices,
holds on the outcome exactly when the assignment satisfies it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .arena import Arena, validate_arena
from .errors import (PrefixShapeMismatch, ProblemSyntaxError, TooManyVariables)
from .formulas import (Const, Formula, Not, TRUE, Var, atoms, evaluate,
                       parse_formula)

QBF_VARIABLE_LIMIT = 20

UNIVERSAL = "A"  # player resolving the universally quantified variables
EXISTENTIAL = "E"


@dataclass(frozen=True)
class QbfInstance:
    """Prenex formula: quantifier blocks (outermost first) over a matrix."""

    blocks: Tuple[Tuple[str, Tuple[str, ...]], ...]
    matrix: Formula

    def variables(self) -> Tuple[str, ...]:
        return tuple(v for _, block in self.blocks for v in block)


def make_qbf(blocks, matrix: Formula) -> QbfInstance:
    blocks = tuple((q, tuple(vs)) for q, vs in blocks)
    declared = []
    for q, vs in blocks:
        if q not in ("forall", "exists"):
            raise ProblemSyntaxError(f"unknown quantifier {q!r}")
        for v in vs:
            if v in declared:
                raise ProblemSyntaxError(f"variable {v!r} quantified twice")
            declared.append(v)
    free = atoms(matrix) - set(declared)
    if free:
        raise ProblemSyntaxError(f"free variables in matrix: {sorted(free)}")
    return QbfInstance(blocks, matrix)


def qbf_eval(qbf: QbfInstance) -> bool:
    """Decide the formula by full truth-table expansion."""
    variables = qbf.variables()
    if len(variables) > QBF_VARIABLE_LIMIT:
        raise TooManyVariables(
            f"{len(variables)} variables exceed the expansion limit {QBF_VARIABLE_LIMIT}")

    def recurse(i: int, true_vars: frozenset) -> bool:
        if i == len(qbf.blocks):
            return evaluate(qbf.matrix, true_vars)
        q, block = qbf.blocks[i]
        combine = all if q == "forall" else any
        return combine(
            recurse(i + 1, true_vars | {v for v, bit in zip(block, bits) if bit})
            for bits in itertools.product((False, True), repeat=len(block)))

    return recurse(0, frozenset())


def parse_qbf(text: str) -> QbfInstance:
    """File format: one ``forall``/``exists`` line per block (outermost
    first), then the matrix formula on the remaining lines."""
    blocks = []
    matrix_lines = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()[0]
        if head in ("forall", "exists") and not matrix_lines:
            vs = line.split()[1:]
            if not vs:
                raise ProblemSyntaxError("empty quantifier block", line=lineno, col=1)
            blocks.append((head, vs))
        else:
            matrix_lines.append((lineno, line))
    if not matrix_lines:
        raise ProblemSyntaxError("missing matrix formula", line=lineno, col=1)
    matrix = parse_formula(" ".join(l for _, l in matrix_lines), line=matrix_lines[0][0])
    return make_qbf(blocks, matrix)


# ---------------------------------------------------------------------------
# arena construction

def _assignment_chain(universal_vars, existential_vars):
    """Vertices and edges of the chain arena.  Choice vertices a1..an
    (universal) and e1..em (existential) fan out to the literal vertices
    <var> / n<var>, which rejoin the chain; the last literal pair loops
    back to a1.  Positive literal is declared before the negated one."""
    vertices = []
    owner: Dict[str, str] = {}
    edges = []
    chain = [(UNIVERSAL, f"a{i+1}", v) for i, v in enumerate(universal_vars)]
    chain += [(EXISTENTIAL, f"e{j+1}", v) for j, v in enumerate(existential_vars)]
    first = chain[0][1]
    for idx, (player, node, var) in enumerate(chain):
        nxt = chain[idx + 1][1] if idx + 1 < len(chain) else first
        vertices += [node, var, f"n{var}"]
        owner[node] = owner[var] = owner[f"n{var}"] = player
        edges += [(node, var), (node, f"n{var}"), (var, nxt), (f"n{var}", nxt)]
    return vertices, owner, first, edges


def build_aesat_instance(qbf: QbfInstance) -> Tuple[Arena, Mapping[str, Formula], Formula]:
    """Two-player instance for the forall-exists problem: the universal
    player always wins, the existential player and the specification want
    the matrix.  Every-Nash-equilibrium verification of the instance then
    agrees with the QBF value."""
    if len(qbf.blocks) != 2 or qbf.blocks[0][0] != "forall" or qbf.blocks[1][0] != "exists":
        raise PrefixShapeMismatch("expected a forall block followed by an exists block")
    xs, ys = qbf.blocks[0][1], qbf.blocks[1][1]
    vertices, owner, initial, edges = _assignment_chain(xs, ys)
    arena = validate_arena((UNIVERSAL, EXISTENTIAL), vertices, owner, initial, edges)
    objectives = {UNIVERSAL: TRUE, EXISTENTIAL: qbf.matrix}
    return arena, objectives, qbf.matrix


def build_easat_instance(qbf: QbfInstance) -> Tuple[Arena, Mapping[str, Formula], Formula]:
    """Zero-sum instance for the exists-forall problem: same chain arena,
    the universal player wants the negated matrix.  CKR verification of
    the instance agrees with the QBF value."""
    if len(qbf.blocks) != 2 or qbf.blocks[0][0] != "exists" or qbf.blocks[1][0] != "forall":
        raise PrefixShapeMismatch("expected an exists block followed by a forall block")
    ys, xs = qbf.blocks[0][1], qbf.blocks[1][1]
    vertices, owner, initial, edges = _assignment_chain(xs, ys)
    arena = validate_arena((UNIVERSAL, EXISTENTIAL), vertices, owner, initial, edges)
    objectives = {UNIVERSAL: Not(qbf.matrix), EXISTENTIAL: qbf.matrix}
    return arena, objectives, qbf.matrix


def build_sat_instance(formula: Formula) -> Tuple[Arena, Mapping[str, Formula], Formula]:
    """Single-player instance for unsatisfiability: the player wants the
    formula, the specification is its syntactic negation.  Variable order
    is first occurrence in the formula."""
    variables = _occurrence_order(formula)
    vertices = []
    owner: Dict[str, str] = {}
    edges = []
    player = "p"
    for i, var in enumerate(variables):
        node = f"v{i+1}"
        nxt = f"v{i+2}" if i + 1 < len(variables) else "v1"
        vertices += [node, var, f"n{var}"]
        owner[node] = owner[var] = owner[f"n{var}"] = player
        edges += [(node, var), (node, f"n{var}"), (var, nxt), (f"n{var}", nxt)]
    arena = validate_arena((player,), vertices, owner, "v1", edges)
    return arena, {player: formula}, Not(formula)


def _occurrence_order(f: Formula):
    order = []

    def walk(g):
        if isinstance(g, Var):
            if g.name not in order:
                order.append(g.name)
        elif isinstance(g, Not):
            walk(g.operand)
        elif not isinstance(g, Const):
            walk(g.left)
            walk(g.right)

    walk(f)
    if not order:
        raise PrefixShapeMismatch("formula has no variables")
    return order

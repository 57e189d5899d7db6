"""Boolean formulas over vertex names and their use as Muller objectives.

A Muller objective is a Boolean formula whose atoms are vertices; a play
satisfies it when the formula holds under the assignment "vertex is
visited infinitely often".  The concrete grammar (ASCII, whitespace
insignificant) is

    atom     ::= [A-Za-z_][A-Za-z0-9_]*  |  "true"  |  "false"
    formula  ::= or_expr ( "->" formula )?        # right-associative
    or_expr  ::= and_expr ( "|" and_expr )*
    and_expr ::= unary ( "&" unary )*
    unary    ::= "!" unary | atom | "(" formula ")"
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Set, Tuple

from .arena import Arena, Lasso, inf_set, outcome
from .errors import ProblemSyntaxError, UnknownVertex


class Formula:
    """Base class for formula nodes.  Nodes are immutable and hashable."""

    def __str__(self):
        return _to_str(self, 0)


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


TRUE = Const(True)
FALSE = Const(False)

# precedence levels for printing: -> is 1, | is 2, & is 3, ! is 4
_PREC = {Implies: 1, Or: 2, And: 3, Not: 4}


def _to_str(f: Formula, parent_prec: int) -> str:
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Var):
        return f.name
    prec = _PREC[type(f)]
    if isinstance(f, Not):
        body = f"!{_to_str(f.operand, prec)}"
    elif isinstance(f, And):
        body = f"{_to_str(f.left, prec)} & {_to_str(f.right, prec + 1)}"
    elif isinstance(f, Or):
        body = f"{_to_str(f.left, prec)} | {_to_str(f.right, prec + 1)}"
    else:
        body = f"{_to_str(f.left, prec + 1)} -> {_to_str(f.right, prec)}"
    return f"({body})" if prec < parent_prec else body


def atoms(f: Formula) -> Set[str]:
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, Const):
        return set()
    if isinstance(f, Not):
        return atoms(f.operand)
    return atoms(f.left) | atoms(f.right)


def evaluate(f: Formula, true_atoms) -> bool:
    """Evaluate under the assignment atom -> (atom in true_atoms)."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Var):
        return f.name in true_atoms
    if isinstance(f, Not):
        return not evaluate(f.operand, true_atoms)
    if isinstance(f, And):
        return evaluate(f.left, true_atoms) and evaluate(f.right, true_atoms)
    if isinstance(f, Or):
        return evaluate(f.left, true_atoms) or evaluate(f.right, true_atoms)
    if isinstance(f, Implies):
        return (not evaluate(f.left, true_atoms)) or evaluate(f.right, true_atoms)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# parsing

_IDENT_START = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz_")
_IDENT_CONT = _IDENT_START | set("0123456789")


class _Tokenizer:
    def __init__(self, text: str, line: int = 1):
        self.text = text
        self.pos = 0
        self.line = line

    def _error(self, message):
        raise ProblemSyntaxError(message, line=self.line, col=self.pos + 1)

    def next_token(self) -> Tuple[str, str, int]:
        t, i = self.text, self.pos
        while i < len(t) and t[i] in " \t\r\n":
            i += 1
        if i >= len(t):
            self.pos = i
            return ("eof", "", i)
        start = i
        c = t[i]
        if c in "()!&|":
            self.pos = i + 1
            return (c, c, start)
        if c == "-":
            if i + 1 < len(t) and t[i + 1] == ">":
                self.pos = i + 2
                return ("->", "->", start)
            self.pos = i
            self._error("expected '->'")
        if c in _IDENT_START:
            while i < len(t) and t[i] in _IDENT_CONT:
                i += 1
            self.pos = i
            return ("ident", t[start:i], start)
        self.pos = i
        self._error(f"unexpected character {c!r}")


class _Parser:
    def __init__(self, text: str, line: int = 1):
        self.tok = _Tokenizer(text, line)
        self.line = line
        self.current = self.tok.next_token()

    def _error(self, message, at=None):
        col = (at if at is not None else self.current[2]) + 1
        raise ProblemSyntaxError(message, line=self.line, col=col)

    def _advance(self):
        self.current = self.tok.next_token()

    def _expect(self, kind):
        if self.current[0] != kind:
            self._error(f"expected {kind!r}, found {self.current[1]!r}")
        self._advance()

    def parse(self) -> Formula:
        f = self.implication()
        if self.current[0] != "eof":
            self._error(f"unexpected trailing input {self.current[1]!r}")
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.current[0] == "->":
            self._advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.current[0] == "|":
            self._advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.current[0] == "&":
            self._advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, at = self.current
        if kind == "!":
            self._advance()
            return Not(self.unary())
        if kind == "(":
            self._advance()
            f = self.implication()
            self._expect(")")
            return f
        if kind == "ident":
            self._advance()
            if value == "true":
                return TRUE
            if value == "false":
                return FALSE
            return Var(value)
        self._error(f"expected a formula, found {value!r}" if value else "unexpected end of formula", at)


def parse_formula(text: str, line: int = 1) -> Formula:
    """Parse ``text`` into a formula; ``line`` seeds error locations."""
    return _Parser(text, line).parse()


# ---------------------------------------------------------------------------
# objectives

def check_vocabulary(formula: Formula, arena: Arena) -> None:
    """Raise :class:`UnknownVertex` if an atom is not an arena vertex."""
    for name in atoms(formula):
        if name not in arena.vertices:
            raise UnknownVertex(name)


def buchi_to_muller(target_set: Iterable[str], arena: Optional[Arena] = None) -> Formula:
    """Disjunction over the target vertices ("visit one of them infinitely
    often"); the empty set yields ``false``.  Disjunct order follows arena
    declaration order when an arena is supplied.
    """
    targets = list(target_set)
    if arena is not None:
        for v in targets:
            if v not in arena.vertices:
                raise UnknownVertex(v)
        targets.sort(key=arena.vertex_index)
    if not targets:
        return FALSE
    f: Formula = Var(targets[0])
    for v in targets[1:]:
        f = Or(f, Var(v))
    return f


def eval_muller(formula: Formula, lasso: Lasso) -> bool:
    """Evaluate the formula under v -> (v visited infinitely often)."""
    return evaluate(formula, inf_set(lasso))


def winners(arena: Arena, objectives: Mapping[object, Formula], profile) -> frozenset:
    """Players whose objective holds on the outcome of ``profile``."""
    lasso = outcome(arena, profile)
    hot = inf_set(lasso)
    return frozenset(p for p in arena.players if evaluate(objectives[p], hot))

"""Game arenas and the lasso-shaped outcomes of positional play.

An arena is a finite directed graph partitioned among players, each of whom
picks the successor at the vertices she owns.  When every player plays
positionally the resulting play is ultimately periodic and is represented
here in a canonical lasso normal form (prefix + cycle, no vertex twice).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Tuple

from .errors import DuplicateOwner, SinkVertex, UnknownPlayer, UnknownVertex


@dataclass(frozen=True)
class Arena:
    """Validated game graph.

    ``players`` and ``vertices`` keep declaration order; every enumeration
    in this package follows that order so results are deterministic.
    """

    players: Tuple[object, ...]
    vertices: Tuple[str, ...]
    owner: Mapping[str, object]
    initial: str
    edges: Tuple[Tuple[str, str], ...]
    _succ: Mapping[str, Tuple[str, ...]] = field(repr=False, compare=False, default=None)

    def successors(self, vertex: str) -> Tuple[str, ...]:
        """Successors of ``vertex`` in edge declaration order."""
        return self._succ[vertex]

    def owned_by(self, player) -> Tuple[str, ...]:
        return tuple(v for v in self.vertices if self.owner[v] == player)

    def vertex_index(self, vertex: str) -> int:
        return self.vertices.index(vertex)


def validate_arena(players: Iterable, vertices: Iterable[str], owner: Mapping[str, object],
                   initial: str, edges: Iterable[Tuple[str, str]]) -> Arena:
    """Check the raw description and build an immutable :class:`Arena`.

    Raises :class:`UnknownVertex`, :class:`UnknownPlayer`,
    :class:`DuplicateOwner` for malformed input and :class:`SinkVertex`
    when some vertex has no outgoing edge.  Duplicate edge declarations
    are idempotent; self-loops are allowed.
    """
    players = tuple(players)
    vertex_list = []
    for v in vertices:
        if v in vertex_list:
            raise DuplicateOwner(v)
        vertex_list.append(v)
    vertex_tuple = tuple(vertex_list)
    vset = set(vertex_tuple)

    for v in vertex_tuple:
        if v not in owner:
            raise UnknownVertex(v)
        if owner[v] not in players:
            raise UnknownPlayer(owner[v])
    for v in owner:
        if v not in vset:
            raise UnknownVertex(v)
    if initial not in vset:
        raise UnknownVertex(initial)

    succ = {v: [] for v in vertex_tuple}
    edge_list = []
    for a, b in edges:
        if a not in vset:
            raise UnknownVertex(a)
        if b not in vset:
            raise UnknownVertex(b)
        if b not in succ[a]:
            succ[a].append(b)
            edge_list.append((a, b))
    for v in vertex_tuple:
        if not succ[v]:
            raise SinkVertex(v)

    frozen_succ = {v: tuple(ss) for v, ss in succ.items()}
    return Arena(players, vertex_tuple, dict(owner), initial, tuple(edge_list),
                 _succ=frozen_succ)


@dataclass(frozen=True)
class Lasso:
    """Canonical form of an ultimately periodic play.

    ``prefix + cycle`` contains no vertex twice; the cycle starts at the
    first vertex whose repetition is detected while replaying the profile.
    """

    prefix: Tuple[str, ...]
    cycle: Tuple[str, ...]

    def unroll(self, length: int) -> Tuple[str, ...]:
        """First ``length`` vertices of the play this lasso denotes."""
        out = list(self.prefix)
        while len(out) < length:
            out.extend(self.cycle)
        return tuple(out[:length])


def _choice_map(profile) -> Mapping[str, str]:
    if hasattr(profile, "as_vertex_map"):
        return profile.as_vertex_map()
    return profile


def outcome(arena: Arena, profile) -> Lasso:
    """Lasso of the unique play obtained by following ``profile`` from the
    initial vertex.  ``profile`` is a positional profile or any mapping
    vertex -> chosen successor (each choice must be an edge).
    """
    choice = _choice_map(profile)
    seen = {}
    path = []
    v = arena.initial
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        nxt = choice[v]
        if nxt not in arena.successors(v):
            raise UnknownVertex(nxt)
        v = nxt
    knot = seen[v]
    return Lasso(tuple(path[:knot]), tuple(path[knot:]))


def inf_set(lasso: Lasso) -> frozenset:
    """Vertices visited infinitely often: exactly the cycle component."""
    return frozenset(lasso.cycle)

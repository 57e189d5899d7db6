"""Exception hierarchy shared by all modules."""


class GameError(Exception):
    """Base class for every error raised by this package."""


class ArenaError(GameError):
    pass


class SinkVertex(ArenaError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} has no outgoing edge")


class UnknownVertex(ArenaError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")


class UnknownPlayer(ArenaError):
    def __init__(self, player):
        self.player = player
        super().__init__(f"unknown player {player!r}")


class DuplicateOwner(ArenaError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} declared with more than one owner")


class PlayerMismatch(GameError):
    pass


class CountOverflow(GameError):
    """An enumeration or search space exceeded its configured cap."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"search space of size {count} exceeds cap {cap}")


class EmptySet(GameError):
    pass


class InvalidBound(GameError):
    pass


class PrefixShapeMismatch(GameError):
    pass


class TooManyVariables(GameError):
    pass


class ProblemSyntaxError(GameError):
    """Malformed input text; carries 1-based line and column."""

    def __init__(self, message, line=0, col=0):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownName(ProblemSyntaxError):
    pass


class MissingSpec(GameError):
    pass

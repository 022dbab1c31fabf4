"""Exception hierarchy shared by every synergy module."""


class GeometryError(Exception):
    """Root of all errors raised by synergy."""


class PreconditionError(GeometryError, ValueError):
    """A caller passed arguments outside an operation's contract."""


class DegenerateLineError(PreconditionError):
    """A line was requested through two identical points."""


class InvalidSequenceError(PreconditionError):
    """An input sequence is not a valid staircase or upper hull sequence."""

    def __init__(self, message, seq=None, position=None):
        super().__init__(message)
        # 1-based, matching certificate references
        self.seq = seq
        self.position = position


class StructuralError(GeometryError):
    """A block reference does not fit the instance it points into."""


class SizeGuardError(GeometryError, ValueError):
    """An exhaustive oracle was asked to search beyond its size guard."""


class InfeasibleSpecError(GeometryError, ValueError):
    """An instance specification cannot be realized."""


class OracleMismatchError(GeometryError, AssertionError):
    """A measured algorithm disagreed with its reference oracle."""


class ParseError(GeometryError, ValueError):
    """Malformed point or certificate text."""

    def __init__(self, message, line=None, column=None):
        location = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(location + message)
        self.line = line
        self.column = column

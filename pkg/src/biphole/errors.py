"""Exception taxonomy shared across the package.

The CLI maps these onto its exit-code contract: parse/input problems exit 4,
connectivity preconditions exit 2, degree preconditions exit 3, and internal
inconsistencies (which indicate a bug, never an expected outcome) exit 1.
"""


class BipholeError(Exception):
    """Base class for all package errors."""


class GraphError(BipholeError):
    """Invalid graph construction: self-loop, out-of-range vertex, bad order."""


class WalkError(BipholeError):
    """A vertex sequence is not a valid path or cycle of the given graph."""


class ParseError(BipholeError):
    """Malformed input text. Carries a byte offset or a line number."""

    def __init__(self, message, *, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = ""
        if offset is not None:
            where = f" (byte offset {offset})"
        elif line is not None:
            where = f" (line {line})"
        super().__init__(message + where)


class NotTwoConnectedError(BipholeError):
    """The operation requires a 2-connected graph."""


class DisconnectedError(BipholeError):
    """Required vertices do not lie in a single connected component."""


class DegreeConditionError(BipholeError):
    """A degree precondition is not met."""


class SizeGuardError(BipholeError):
    """Instance exceeds the brute-force size guard; raise instead of hanging."""


class UnknownNameError(BipholeError):
    """Unknown family, condition, or property name; lists the valid ones."""

    def __init__(self, kind, name, valid):
        self.kind = kind
        self.name = name
        self.valid = tuple(valid)
        super().__init__(f"unknown {kind} {name!r}; valid: {', '.join(self.valid)}")


class InternalInconsistencyError(BipholeError):
    """A construction step that is provably impossible happened anyway.

    Seeing this means either a bug or a wrong hole-free split was supplied.
    """

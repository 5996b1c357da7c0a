"""Exception hierarchy shared across the package."""


class KnotpolyError(Exception):
    """Base class for all package-specific errors."""


class RingMismatchError(KnotpolyError):
    """Arithmetic attempted between polynomials over different rings."""


class ValidationError(KnotpolyError):
    """A diagram violates a structural invariant."""


class ArcDegreeError(ValidationError):
    """An arc identifier does not appear exactly twice in the crossing list."""


class DanglingArcError(ValidationError):
    """A crossing references an arc identifier outside 1..n_arcs."""


class EmptyTupleEntryError(ValidationError):
    """A crossing tuple entry is missing or not a positive integer."""


class EmptyDiagramError(KnotpolyError):
    """An invariant was requested for a diagram with no components."""


class OrientationError(KnotpolyError):
    """An oriented quantity was requested for an unoriented diagram."""


class ParseError(KnotpolyError):
    """Input text could not be parsed.

    ``position`` is a 0-based character offset into the input; ``line`` is
    set when the source is line-oriented (table files).
    """

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where += f" (line {line})"
        if position is not None:
            where += f" (at offset {position})"
        super().__init__(message + where)


class GeneratorOutOfRangeError(ParseError):
    """A braid letter references a generator index outside 1..n-1."""


class DuplicateNameError(ParseError):
    """A table file contains two entries with the same name."""


class StaleSiteError(KnotpolyError):
    """A move site no longer matches the diagram it is applied to."""


class StateCapError(KnotpolyError):
    """A state enumeration exceeds the configured crossing cap."""


class RecursionGuardError(KnotpolyError):
    """A skein recursion exceeded its depth guard; indicates a bug."""

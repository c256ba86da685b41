"""Exception hierarchy shared across the package."""


class OrimatError(Exception):
    """Base class for all package errors."""


class DimensionError(OrimatError, ValueError):
    """Sign vectors of mismatched length combined."""


class DomainError(OrimatError, ValueError):
    """Argument outside the operation's admissible range."""


class FormatError(OrimatError, ValueError):
    """Malformed textual input (chirotope strings, database lines)."""


class NonUniformError(FormatError):
    """Chirotope text contains a zero; only uniform matroids are supported."""


class EmptyCircuitSetError(OrimatError, ValueError):
    """An orthogonality statistic was requested on a matroid with no circuits
    (n = r).  Silent vacuous answers would corrupt o-vectors, so this is hard."""

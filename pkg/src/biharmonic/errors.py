"""Exception hierarchy shared by all modules."""


class BiharmonicError(Exception):
    """Base class for every error raised by this package."""

    reason = "Error"


class NotInvertible(BiharmonicError, ArithmeticError):
    reason = "NotInvertible"


class ZeroElement(BiharmonicError, ZeroDivisionError):
    reason = "ZeroElement"


class InvalidBasis(BiharmonicError, ValueError):
    reason = "InvalidBasis"


class InvalidDegree(BiharmonicError, ValueError):
    reason = "InvalidDegree"


class DegreeOverflow(BiharmonicError, OverflowError):
    """A polynomial operation would exceed the configured degree cap."""

    reason = "DegreeOverflow"


class GridTooSmall(BiharmonicError, ValueError):
    reason = "GridTooSmall"


class DegenerateDirection(BiharmonicError, ValueError):
    reason = "DegenerateDirection"


class SchemaError(BiharmonicError, ValueError):
    """A JSON document does not match the expected layout."""

    reason = "SchemaError"

"""Exception hierarchy shared by every module.

The CLI maps :class:`ParseError` to exit code 2, any
:class:`PreconditionViolated` to exit code 3 and :class:`InvariantBreach`
to exit code 4.
"""


class GeometryError(Exception):
    """Base class of all errors raised by this package."""


class ParseError(GeometryError, ValueError):
    pass


class PreconditionViolated(GeometryError, ValueError):
    pass


class InvariantBreach(GeometryError, AssertionError):
    """A postcondition failed; this is always a bug."""


class IndexOutOfRange(PreconditionViolated, IndexError):
    pass


class NotIncreasing(PreconditionViolated):
    pass


class SizeMismatch(PreconditionViolated):
    pass


class NotOrdinary(PreconditionViolated):
    pass


class BadM(PreconditionViolated):
    pass


class NotConvex(PreconditionViolated):
    pass


class StrictnessRequired(PreconditionViolated):
    pass


class NoInteriorCrossing(PreconditionViolated):
    pass


class NotAllExtreme(PreconditionViolated):
    pass


class TooFew(PreconditionViolated):
    pass


class Degenerate(PreconditionViolated):
    pass


class TooLarge(PreconditionViolated):
    pass


class GuardrailExceeded(PreconditionViolated):
    pass

"""Exception hierarchy.

Input problems derive from ``ValueError`` so callers can treat them as bad
arguments.  :class:`TheoremViolation` is deliberately *not* a ``ValueError``:
it means an exact computation contradicted a theorem and must never be
swallowed as a usage error.
"""


class SyzygyError(Exception):
    """Base class for every error raised by this package."""


class InputError(SyzygyError, ValueError):
    """The arguments do not satisfy an operation's preconditions."""


class TheoremViolation(SyzygyError):
    """An exact check contradicted the statement being verified."""


class IdenticalLines(InputError):
    pass


class IdenticalPoints(InputError):
    pass


class DegenerateConic(InputError):
    pass


class NotDivisible(InputError):
    pass


class DegreeTooLow(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class CurveCountError(InputError):
    """The space of curves through a point set is not one-dimensional."""

    def __init__(self, nullity: int, message: str | None = None):
        self.nullity = nullity
        super().__init__(message or f"curve space has dimension {nullity}")


class NoCurve(CurveCountError):
    pass


class NotUnique(CurveCountError):
    pass


class BadPartition(InputError):
    pass


class NotTransverse(InputError):
    pass


class NotGeneric(InputError):
    pass


class DegenerateArrangement(InputError):
    pass


class DegenerateInput(InputError):
    pass


class PointsNotOnConic(InputError):
    pass


class BadOnConicCount(InputError):
    pass


class SingularPoint(InputError):
    pass


class LineInsideCurve(InputError):
    pass


class DegenerateChoice(InputError):
    pass


class EmptyViewport(InputError):
    pass

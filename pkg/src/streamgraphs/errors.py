"""Exception hierarchy shared by every module."""


class StreamError(ValueError):
    """Base class for all input and contract violations."""

    code = "stream-error"


class IntervalError(StreamError):
    code = "reversed-interval"


class KindError(StreamError):
    """Operation applied to a stream (or graph) of the wrong kind."""

    code = "kind-mismatch"


class UnknownNodeError(StreamError):
    code = "unknown-node"


class ValidationError(StreamError):
    """A structural invariant of the stream does not hold."""

    code = "invalid-stream"


class ContainmentError(ValidationError):
    code = "containment"


class SideError(ValidationError):
    code = "side-violation"


class WeightSupportError(ValidationError):
    code = "weight-support"


class UndefinedMetric(ArithmeticError):
    """A metric whose denominator vanishes.

    Kept apart from ``StreamError`` on purpose: 0 is a legitimate metric
    value and must never be returned in place of this outcome.
    """

"""Exception types raised by toposcope."""


class ToposcopeError(ValueError):
    """Base class for every error raised by the library."""


class BadPoint(ToposcopeError):
    pass


class NotATopology(ToposcopeError):
    pass


class NotT0(ToposcopeError):
    pass


class NotT1(ToposcopeError):
    pass


class NotSober(ToposcopeError):
    pass


class TooLarge(ToposcopeError):
    pass


class EmptyFamily(ToposcopeError):
    pass


class MixedGroundSize(ToposcopeError):
    pass


class MissingWitness(ToposcopeError):
    pass


class PreconditionViolated(ToposcopeError):
    pass


class BadPartition(ToposcopeError):
    pass


class BadSubspace(ToposcopeError):
    pass


class EqualPoints(ToposcopeError):
    pass


class ComparablePair(ToposcopeError):
    pass


class ArityMismatch(ToposcopeError):
    pass


class EmptySetMin(ToposcopeError):
    pass


class IndexOverlap(ToposcopeError):
    pass


class NotCofinite(ToposcopeError):
    pass


class UnknownSuite(ToposcopeError):
    pass


class BadParam(ToposcopeError):
    pass

"""Exception types raised across the package."""


class ZonotopalError(Exception):
    """Base class for all library errors."""


class RankDeficient(ZonotopalError, ValueError):
    pass


class UnknownLabel(ZonotopalError, KeyError):
    pass


class EmptyL(ZonotopalError, ValueError):
    pass


class DisconnectedGraph(ZonotopalError, ValueError):
    pass


class GroundTooLarge(ZonotopalError, ValueError):
    pass


class LoopPresent(ZonotopalError, ValueError):
    pass


class DegreeUnderflow(ZonotopalError, ValueError):
    pass


class KOutOfRange(ZonotopalError, ValueError):
    pass


class CostGuard(ZonotopalError, ValueError):
    pass


class NotAutomorphism(ZonotopalError, ValueError):
    pass


class DegreeOutOfRange(ZonotopalError, ValueError):
    pass


class ParseError(ZonotopalError, ValueError):
    pass


class AuditFailure(ZonotopalError, AssertionError):
    """A random element of L failed to annihilate a computed inverse-system element."""

    def __init__(self, alpha, f, d):
        self.alpha = alpha
        self.f = f
        self.d = d
        super().__init__(f"alpha={alpha} does not kill degree-{d} element {f}")

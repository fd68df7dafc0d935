"""Exception hierarchy shared by every ringauto module."""


class RingAutoError(Exception):
    """Base class for domain errors raised by ringauto."""


class ModulusMismatch(RingAutoError, ValueError):
    pass


class BadInput(RingAutoError, ValueError):
    pass


class NotAUnit(RingAutoError, ArithmeticError):
    pass


class BadDivisor(RingAutoError, ValueError):
    pass


class ZeroInput(RingAutoError, ValueError):
    pass


class NotInvertible(RingAutoError, ValueError):
    pass


class InternalCheckFailed(RingAutoError, RuntimeError):
    """A self-verification step failed. Always a bug."""


class OrderExceedsCap(RingAutoError, RuntimeError):
    pass


class SearchSpaceTooLarge(RingAutoError, RuntimeError):
    pass


class RingIsReduced(RingAutoError, ValueError):
    pass


class BadFactorization(RingAutoError, ValueError):
    pass


class NotAGroup(RingAutoError, ValueError):
    pass


class BoundMismatch(RingAutoError, ValueError):
    pass


class NotZ4(RingAutoError, ValueError):
    pass


class InconsistentWithCatalog(RingAutoError, RuntimeError):
    """Fixed-ring linear algebra disagrees with the Z_4 catalog."""

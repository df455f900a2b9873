"""Exception hierarchy shared by every module."""


class PermRingError(Exception):
    """Base class for all errors raised by permring."""


class DegreeMismatch(PermRingError):
    pass


class OrderBoundExceeded(PermRingError):
    pass


class NotAnElement(PermRingError):
    pass


class ParentMismatch(PermRingError):
    pass


class NotPrime(PermRingError):
    pass


class GroupMismatch(PermRingError):
    pass


class TupleLengthOutOfRange(PermRingError):
    pass


class SizeBudgetExceeded(PermRingError):
    pass


class BudgetExceeded(PermRingError):
    """Raised by the brute-force oracles when an enumeration is too large."""


class PrimeDoesNotDivideOrder(PermRingError):
    pass


class MissingPrime(PermRingError):
    pass


class NotTransitive(PermRingError):
    pass


class ZeroRing(PermRingError):
    pass


class UnsupportedCategory(PermRingError):
    pass


class InternalInconsistency(PermRingError):
    """A computed result contradicts a structural identity it must satisfy."""


class NonConjugateClosures(InternalInconsistency):
    """Closure candidates at the top of the tower are not all conjugate."""


class ParseError(PermRingError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class UnsupportedFamily(ParseError):
    pass


__all__ = [
    "PermRingError",
    "DegreeMismatch",
    "OrderBoundExceeded",
    "NotAnElement",
    "ParentMismatch",
    "NotPrime",
    "GroupMismatch",
    "TupleLengthOutOfRange",
    "SizeBudgetExceeded",
    "BudgetExceeded",
    "PrimeDoesNotDivideOrder",
    "MissingPrime",
    "NotTransitive",
    "ZeroRing",
    "UnsupportedCategory",
    "InternalInconsistency",
    "NonConjugateClosures",
    "ParseError",
    "UnsupportedFamily",
]

"""Exception hierarchy shared by every module."""


class PosetError(ValueError):
    """Base class for invalid poset-level input."""


class CycleError(PosetError):
    pass


class NotBounded(PosetError):
    pass


class TooSmall(PosetError):
    pass


class FactorTooSmall(PosetError):
    pass


class NotAProduct(PosetError):
    pass


class BadSubset(PosetError):
    pass


class HypothesisViolated(PosetError):
    """An argument falls outside the hypothesis of the formula being applied."""


class NotABlocker(PosetError):
    pass


class UnsafeMap(PosetError):
    pass


class OutOfEnvelope(PosetError):
    pass


class ParseError(PosetError):
    pass

"""Exception types raised by the dpsymbol modules."""


class DPSymbolError(ValueError):
    """Base class for every error raised by this package."""


class NotPrimeError(DPSymbolError):
    pass


class ZeroInverse(DPSymbolError, ZeroDivisionError):
    pass


class DenominatorDivisible(DPSymbolError, ZeroDivisionError):
    pass


class RingMismatch(DPSymbolError):
    pass


class BNotInvertible(DPSymbolError, ZeroDivisionError):
    pass


class NotApplicable(DPSymbolError):
    """Raised when the hypotheses of a checker are not met."""


class NotAField(DPSymbolError):
    pass


class ZeroElement(DPSymbolError):
    pass


class CDivisible(DPSymbolError, ZeroDivisionError):
    pass

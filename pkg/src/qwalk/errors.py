"""Exception hierarchy shared by every qwalk module."""


class QwalkError(Exception):
    """Base class for all qwalk errors."""


class ParseError(QwalkError, ValueError):
    pass


class InvalidStep(QwalkError, ValueError):
    pass


class NotSmallStep(QwalkError, ValueError):
    pass


class PredicateOutOfScope(QwalkError):
    """A classification predicate was asked about a set it is not stated for."""


class DivisionByZeroPoly(QwalkError, ZeroDivisionError):
    pass


class InexactDivision(QwalkError, ArithmeticError):
    pass


class DegenerateElimination(QwalkError):
    """Both elimination orders produced an identically zero eliminant."""


class ZeroHessianTerm(QwalkError):
    pass


class HalfPlaneConfined(QwalkError):
    def __init__(self, witness):
        super().__init__(f"step set lies in the half-plane {witness[0]}*x + {witness[1]}*y >= 0")
        self.witness = witness


class PrecisionExhausted(QwalkError):
    pass


class DomainError(QwalkError, ValueError):
    pass


class NoMatchingRoot(QwalkError):
    pass


class AmbiguousRoot(QwalkError):
    pass


class CapExceeded(QwalkError):
    pass


class PeriodMismatch(QwalkError):
    pass


class InsufficientTerms(QwalkError):
    pass


class NonPositiveTerm(QwalkError):
    pass


class UnmatchedFixture(QwalkError):
    pass

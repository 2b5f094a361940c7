"""Exception hierarchy shared by every module of the package."""


class MOPError(Exception):
    """Base class for all errors raised by classical_mops."""


class InvalidParams(MOPError, ValueError):
    """Weight-system parameters violate the family's constraints."""


class IndexOutOfRange(MOPError, IndexError):
    pass


class NumericError(MOPError, ArithmeticError):
    """Base for numeric failures (poles, singular systems, lost precision)."""


class PoleError(NumericError):
    pass


class NonTerminating(NumericError):
    pass


class DenominatorPole(NumericError):
    pass


class SingularSystem(NumericError):
    pass


class RouteMismatch(NumericError):
    """The two independent derivations of a recurrence coefficient disagree."""


class PrecisionExhausted(NumericError):
    pass

"""Multiple orthogonal polynomials of the classical families, with a moment-based oracle."""

from .arith import DEFAULT_PRECISION, working_precision
from .errors import (
    DenominatorPole,
    IndexOutOfRange,
    InvalidParams,
    MOPError,
    NonTerminating,
    NumericError,
    PoleError,
    PrecisionExhausted,
    RouteMismatch,
    SingularSystem,
)
from .families import (
    HermiteMultiple,
    JacobiPineiro,
    LaguerreFirst,
    LaguerreSecond,
    moment,
    nn_coefficients,
    step_line_coefficients,
    type_i_coefficients,
    type_ii_coefficients,
)
from .polynomial import Polynomial

__version__ = "0.1.0"

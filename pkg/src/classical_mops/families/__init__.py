"""Closed forms for the four classical multiple-orthogonal families."""

from . import hermite, jacobi_pineiro, laguerre_first, laguerre_second  # noqa: F401  (registration)
from .core import (
    NNCoefficients,
    moment,
    nn_coefficients,
    step_line_coefficients,
    type_i_all,
    type_i_coefficients,
    type_ii_coefficients,
)
from .hermite import classical_hermite
from .jacobi_pineiro import jp_lemma_brute_force, jp_lemma_closed_form
from .params import (
    FAMILY_NAMES,
    FamilyParams,
    HermiteMultiple,
    JacobiPineiro,
    LaguerreFirst,
    LaguerreSecond,
    describe,
    family_name,
)

__all__ = [
    "FAMILY_NAMES",
    "FamilyParams",
    "HermiteMultiple",
    "JacobiPineiro",
    "LaguerreFirst",
    "LaguerreSecond",
    "NNCoefficients",
    "classical_hermite",
    "describe",
    "family_name",
    "jp_lemma_brute_force",
    "jp_lemma_closed_form",
    "moment",
    "nn_coefficients",
    "step_line_coefficients",
    "type_i_all",
    "type_i_coefficients",
    "type_ii_coefficients",
]

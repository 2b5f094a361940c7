"""Weight-system parameters for the four classical families.

Parameters are normally exact rationals, in which case the AT conditions
are checked exactly.  Real-valued parameters are allowed too (the
parameter-scaling limits need irrational values such as ``beta + c*sqrt(beta)``);
for those only the range constraints are enforced, and a vanishing
denominator surfaces later as :class:`DenominatorPole`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from ..arith import is_exact, parse_rational
from ..errors import InvalidParams


def _coerce(values) -> tuple:
    out = []
    for v in values:
        if isinstance(v, (mpmath.mpf, Fraction, int)):
            out.append(Fraction(v) if isinstance(v, int) else v)
        elif isinstance(v, float):
            out.append(Fraction(v))
        else:
            out.append(parse_rational(v))
    return tuple(out)


def _integer_difference(a, b) -> bool:
    if is_exact(a) and is_exact(b):
        return Fraction(a - b).denominator == 1
    return False


def _check_distinct_modulo_integers(name: str, values: Sequence) -> None:
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if _integer_difference(values[i], values[j]):
                raise InvalidParams(
                    f"AT condition violated: {name}_{i + 1} - {name}_{j + 1} = "
                    f"{values[i] - values[j]} is an integer"
                )


def _check_distinct(name: str, values: Sequence) -> None:
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] == values[j]:
                raise InvalidParams(f"AT condition violated: {name}_{i + 1} = {name}_{j + 1}")


@dataclass(frozen=True)
class JacobiPineiro:
    """Weights ``x**alpha_i`` against ``(1-x)**beta dx`` on ``[0, 1]``."""

    alphas: tuple
    beta: object

    def __post_init__(self):
        object.__setattr__(self, "alphas", _coerce(self.alphas))
        object.__setattr__(self, "beta", _coerce([self.beta])[0])
        if not self.alphas:
            raise InvalidParams("need at least one weight")
        if any(a <= -1 for a in self.alphas) or self.beta <= -1:
            raise InvalidParams("Jacobi-Piñeiro needs alpha_i > -1 and beta > -1")
        _check_distinct_modulo_integers("alpha", self.alphas)

    @property
    def p(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class LaguerreFirst:
    """Weights ``exp(-x) x**alpha_i`` on ``[0, inf)``."""

    alphas: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphas", _coerce(self.alphas))
        if not self.alphas:
            raise InvalidParams("need at least one weight")
        if any(a <= -1 for a in self.alphas):
            raise InvalidParams("Laguerre (first kind) needs alpha_i > -1")
        _check_distinct_modulo_integers("alpha", self.alphas)

    @property
    def p(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class LaguerreSecond:
    """Weights ``x**alpha0 exp(-c_i x)`` on ``[0, inf)``."""

    alpha0: object
    cs: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha0", _coerce([self.alpha0])[0])
        object.__setattr__(self, "cs", _coerce(self.cs))
        if not self.cs:
            raise InvalidParams("need at least one weight")
        if self.alpha0 <= -1 or any(c <= 0 for c in self.cs):
            raise InvalidParams("Laguerre (second kind) needs alpha0 > -1 and c_i > 0")
        _check_distinct("c", self.cs)

    @property
    def p(self) -> int:
        return len(self.cs)


@dataclass(frozen=True)
class HermiteMultiple:
    """Weights ``exp(-x**2 + c_i x)`` on the real line."""

    cs: tuple

    def __post_init__(self):
        object.__setattr__(self, "cs", _coerce(self.cs))
        if not self.cs:
            raise InvalidParams("need at least one weight")
        _check_distinct("c", self.cs)

    @property
    def p(self) -> int:
        return len(self.cs)


FamilyParams = JacobiPineiro | LaguerreFirst | LaguerreSecond | HermiteMultiple

FAMILY_NAMES = {
    "jp": JacobiPineiro,
    "laguerre1": LaguerreFirst,
    "laguerre2": LaguerreSecond,
    "hermite": HermiteMultiple,
}


def family_name(params: FamilyParams) -> str:
    for name, cls in FAMILY_NAMES.items():
        if isinstance(params, cls):
            return name
    raise TypeError(f"unknown family {type(params).__name__}")


def describe(params: FamilyParams) -> dict:
    """JSON-friendly parameter record (exact values as strings)."""
    def s(v):
        return str(v) if is_exact(v) else mpmath.nstr(v, 20)

    if isinstance(params, JacobiPineiro):
        return {"family": "jp", "alpha": [s(a) for a in params.alphas], "beta": s(params.beta)}
    if isinstance(params, LaguerreFirst):
        return {"family": "laguerre1", "alpha": [s(a) for a in params.alphas]}
    if isinstance(params, LaguerreSecond):
        return {"family": "laguerre2", "alpha0": s(params.alpha0), "c": [s(c) for c in params.cs]}
    return {"family": "hermite", "c": [s(c) for c in params.cs]}

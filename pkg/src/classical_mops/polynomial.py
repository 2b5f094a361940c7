"""Dense polynomials in the monomial basis over arbitrary-precision reals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath

from .arith import to_real


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree; the empty tuple is the zero polynomial.

    Only exact zeros are trimmed from the top, so a numerically tiny leading
    coefficient stays visible to whoever inspects it.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim([to_real(c) for c in self.coeffs]))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]]) -> "Polynomial":
        """Accumulate ``(degree, coefficient)`` pairs."""
        acc: dict[int, mpmath.mpf] = {}
        for d, c in terms:
            acc[d] = acc.get(d, mpmath.mpf(0)) + to_real(c)
        if not acc:
            return cls.zero()
        out = [mpmath.mpf(0)] * (max(acc) + 1)
        for d, c in acc.items():
            out[d] = c
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        """``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else mpmath.mpf(0)

    def coeff(self, d: int):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else mpmath.mpf(0)

    def __call__(self, x):
        x = to_real(x)
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(d) + other.coeff(d) for d in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(d) - other.coeff(d) for d in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial.zero()
            out = [mpmath.mpf(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        s = to_real(other)
        return Polynomial(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "Polynomial":
        """Multiply by ``x**k``."""
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def compose_affine(self, scale, offset) -> "Polynomial":
        """``q(x) = self(scale*x + offset)``."""
        scale, offset = to_real(scale), to_real(offset)
        lin = Polynomial((offset, scale))
        out = Polynomial.zero()
        for c in reversed(self.coeffs):
            out = out * lin + Polynomial((c,))
        return out

    def max_abs_coeff(self):
        return max((abs(c) for c in self.coeffs), default=mpmath.mpf(0))

    def __repr__(self) -> str:
        body = ", ".join(mpmath.nstr(c, 12) for c in self.coeffs)
        return f"Polynomial([{body}])"


def linear_combination(pairs: Sequence[tuple[object, Polynomial]]) -> Polynomial:
    out = Polynomial.zero()
    for scalar, poly in pairs:
        if not poly.is_zero:
            out = out + poly * scalar
    return out

"""Arbitrary-precision scalars and terminating hypergeometric-type series.

Reals are :class:`mpmath.mpf` values evaluated at the precision of the
enclosing :func:`working_precision` block.  Exact parameters are carried as
:class:`fractions.Fraction` (or ``int``) and only rounded when they enter a
floating computation, which keeps non-positive-integer detection exact on
the normal path.
"""

from __future__ import annotations

import contextlib
import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence, Union

import mpmath
from mpmath import libmp

from .errors import DenominatorPole, NonTerminating, PoleError

DEFAULT_PRECISION = 256
MIN_PRECISION = 64

Rational = Fraction
Exact = Union[int, Fraction]
Number = Union[int, Fraction, mpmath.mpf]


@contextlib.contextmanager
def working_precision(bits: int) -> Iterator[int]:
    """Evaluate the enclosed block with ``bits`` of mantissa."""
    bits = int(bits)
    if bits < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {bits}")
    with mpmath.workprec(bits):
        yield bits


def precision() -> int:
    return mpmath.mp.prec


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"1/3"``, ``"0.25"``, ``"-1"`` (or pass through) as an exact rational."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def to_real(x) -> mpmath.mpf:
    """Round ``x`` to the working precision (correctly rounded for rationals)."""
    if isinstance(x, mpmath.mpf):
        return +x
    if isinstance(x, Fraction):
        prec = mpmath.mp.prec
        return mpmath.mpf(libmp.from_rational(x.numerator, x.denominator, prec, libmp.round_nearest))
    if isinstance(x, int):
        return mpmath.mpf(x)
    if isinstance(x, str):
        try:
            return to_real(Fraction(x))
        except ValueError:
            return mpmath.mpf(x)
    return mpmath.mpf(x)


def _tolerance() -> mpmath.mpf:
    return mpmath.ldexp(mpmath.mpf(1), -(mpmath.mp.prec // 2))


def nonpositive_integer(x) -> int | None:
    """Return ``-x`` if ``x`` is a non-positive integer, else ``None``.

    Exact inputs are tested exactly; Reals are accepted when within
    ``2**(-precision/2)`` of a non-positive integer.
    """
    if isinstance(x, int):
        return -x if x <= 0 else None
    if isinstance(x, Fraction):
        if x.denominator == 1 and x <= 0:
            return -x.numerator
        return None
    x = to_real(x)
    r = mpmath.nint(x)
    if r <= 0 and abs(x - r) < _tolerance():
        return -int(r)
    return None


def vanishes(x) -> bool:
    """Exact zero test for rationals; ``|x| < 2**(-precision/2)`` for Reals."""
    if is_exact(x):
        return x == 0
    return abs(to_real(x)) < _tolerance()


def pochhammer(x, n: int):
    """Rising factorial ``x (x+1) ... (x+n-1)`` by explicit product.

    Exact inputs give an exact result; anything else is evaluated at the
    working precision.
    """
    if n < 0:
        raise ValueError("pochhammer order must be non-negative")
    if is_exact(x):
        out = Fraction(1)
        for j in range(n):
            out *= x + j
        return out
    x = to_real(x)
    out = mpmath.mpf(1)
    for j in range(n):
        out *= x + j
    return out


def gamma(x) -> mpmath.mpf:
    if nonpositive_integer(x) is not None:
        raise PoleError(f"gamma has a pole at {x}")
    return mpmath.gamma(to_real(x))


def _terminating_order(params: Sequence) -> int | None:
    orders = [k for k in (nonpositive_integer(a) for a in params) if k is not None]
    return min(orders) if orders else None


def pochhammer_table(x, upto: int) -> tuple[list, int | None]:
    """``[(x)_0, ..., (x)_upto]`` plus the first order at which it vanishes."""
    table = [mpmath.mpf(1)]
    zero_from = None
    xr = to_real(x)
    for j in range(upto):
        if zero_from is None and vanishes(x + j if is_exact(x) else xr + j):
            zero_from = j + 1
        table.append(table[-1] * (xr + j))
    return table, zero_from


def pfq_terminating(upper: Sequence, lower: Sequence, x) -> mpmath.mpf:
    """Sum a terminating generalized hypergeometric series.

    The series stops at the smallest order ``N`` for which an upper parameter
    equals ``-N``.  A lower parameter whose Pochhammer symbol vanishes at an
    order ``<= N`` raises :class:`DenominatorPole`.
    """
    order = _terminating_order(upper)
    if order is None:
        raise NonTerminating(f"no non-positive integer among upper parameters {list(upper)}")
    ups = [to_real(a) for a in upper]
    xr = to_real(x)
    for b in lower:
        for j in range(order):
            if vanishes(b + j if is_exact(b) else to_real(b) + j):
                raise DenominatorPole(f"lower parameter {b} vanishes at order {j + 1}")
    lows = [to_real(b) for b in lower]
    term = mpmath.mpf(1)
    total = mpmath.mpf(1)
    for l in range(order):
        num = mpmath.mpf(1)
        for a in ups:
            num *= a + l
        den = mpmath.mpf(l + 1)
        for b in lows:
            den *= b + l
        term = term * num * xr / den
        total += term
    return total


def kampe_de_feriet(
    shared_upper: Sequence,
    shared_lower: Sequence,
    per_variable_upper: Sequence[Sequence],
    per_variable_lower: Sequence[Sequence],
    xs: Sequence,
) -> mpmath.mpf:
    """Terminating multiple Kampé de Fériet series in ``len(xs)`` variables.

    Every summation index must be bounded, either by a non-positive integer
    among its own upper parameters or by one among the shared upper
    parameters (which bounds ``l_1 + ... + l_p``).  Terms are accumulated in
    ascending lexicographic order of ``(l_1, ..., l_p)``.
    """
    p = len(xs)
    if len(per_variable_upper) != p or len(per_variable_lower) != p:
        raise ValueError("need one upper and one lower parameter list per variable")
    shared_bound = _terminating_order(shared_upper)
    bounds = []
    for q in range(p):
        own = _terminating_order(per_variable_upper[q])
        if own is None and shared_bound is None:
            raise NonTerminating(f"summation index {q + 1} is unbounded")
        bounds.append(min(b for b in (own, shared_bound) if b is not None))
    total_bound = sum(bounds) if shared_bound is None else min(shared_bound, sum(bounds))

    shared_up = [pochhammer_table(a, total_bound)[0] for a in shared_upper]
    shared_low = [pochhammer_table(b, total_bound) for b in shared_lower]
    slot = []
    for q in range(p):
        ups = [pochhammer_table(a, bounds[q])[0] for a in per_variable_upper[q]]
        lows = [pochhammer_table(b, bounds[q]) for b in per_variable_lower[q]]
        xq = to_real(xs[q])
        row = []
        for l in range(bounds[q] + 1):
            if any(zf is not None and l >= zf for _, zf in lows):
                row.append(None)
                continue
            val = xq**l / math.factorial(l)
            for t in ups:
                val *= t[l]
            for t, _ in lows:
                val /= t[l]
            row.append(val)
        slot.append(row)

    total = mpmath.mpf(0)

    def walk(q: int, budget: int, acc, level: int):
        nonlocal total
        if q == p:
            if any(zf is not None and level >= zf for _, zf in shared_low):
                raise DenominatorPole(f"shared lower parameter vanishes at total order {level}")
            val = acc
            for t in shared_up:
                val *= t[level]
            for t, _ in shared_low:
                val /= t[level]
            total += val
            return
        for l in range(min(bounds[q], budget) + 1):
            f = slot[q][l]
            if f is None:
                raise DenominatorPole(f"lower parameter of variable {q + 1} vanishes at order {l}")
            walk(q + 1, budget - l, acc * f, level + l)

    walk(0, total_bound, mpmath.mpf(1), 0)
    return total


def pfaff_saalschutz_rhs(n: int, a, b, c) -> mpmath.mpf:
    """``(c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)``, the balanced 3F2(1) value."""
    num = pochhammer(c - a, n) * pochhammer(c - b, n)
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if vanishes(den):
        raise DenominatorPole("(c)_n (c-a-b)_n vanishes")
    return to_real(num) / to_real(den)


def gauss_2f1_rhs(n: int, b, c) -> mpmath.mpf:
    """Chu-Vandermonde value ``(c-b)_n / (c)_n`` of 2F1(-n, b; c; 1)."""
    den = pochhammer(c, n)
    if vanishes(den):
        raise DenominatorPole("(c)_n vanishes")
    return to_real(pochhammer(c - b, n)) / to_real(den)


def relative_error(a, b) -> mpmath.mpf:
    """``|a-b| / max(1, |a|, |b|)``."""
    a, b = to_real(a), to_real(b)
    return abs(a - b) / max(mpmath.mpf(1), abs(a), abs(b))


def decimal_digits(bits: int | None = None) -> int:
    """Digits needed for a lossless decimal round trip at ``bits`` precision."""
    bits = mpmath.mp.prec if bits is None else bits
    return math.ceil(bits * math.log10(2)) + 2


def to_decimal(x, bits: int | None = None) -> str:
    bits = mpmath.mp.prec if bits is None else bits
    return libmp.to_str(to_real(x)._mpf_, decimal_digits(bits), strip_zeros=False)


def lex_indices(bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All integer vectors ``0 <= l_q <= bounds[q]`` in lexicographic order."""
    return itertools.product(*(range(b + 1) for b in bounds))

"""Parameter-scaling limits between the families, checked by two-point error decay.

Each relation maps a source family at scale ``s`` (``beta`` or ``t``) onto a
target family.  The error against the target is measured at two scales and
the decay ratio must beat the expected convergence order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from . import combinatorics as cb
from . import families as fm
from .arith import relative_error, to_real, working_precision
from .errors import PrecisionExhausted
from .verify import CheckReport

LIMIT_PRECISION = 384
SCALES = (10**4, 10**8)
SAMPLE_X = Fraction(1, 2)

LAGUERRE1_ALPHAS = (Fraction(0), Fraction(1, 2))
LAGUERRE2_ALPHA0 = Fraction(1, 2)
LAGUERRE2_CS = (Fraction(1), Fraction(2))
HERMITE_CS = (Fraction(-1), Fraction(1))
JP_BETA_FOR_L2 = LAGUERRE2_ALPHA0


def _jp_for_laguerre1(beta):
    return fm.JacobiPineiro(LAGUERRE1_ALPHAS, beta)


def _jp_for_laguerre2(t):
    return fm.JacobiPineiro(tuple(to_real(c) * t for c in LAGUERRE2_CS), JP_BETA_FOR_L2)


def _jp_for_hermite(beta):
    r = mpmath.sqrt(beta)
    return fm.JacobiPineiro(tuple(beta + to_real(c) * r for c in HERMITE_CS), beta)


def _laguerre1_for_hermite(beta):
    r = mpmath.sqrt(beta / 2)
    return fm.LaguerreFirst(tuple(beta + to_real(c) * r for c in HERMITE_CS))


def _type_ii_instances():
    return [n for n in cb.box(2, 2) if sum(n) > 0]


def _type_i_instances():
    return [(n, i) for n in cb.box(2, 2) for i in (1, 2) if n[i - 1] > 0]


def _type_ii_values(source, target, scaled: Callable) -> tuple[list, list]:
    x = to_real(SAMPLE_X)
    pre, want = [], []
    for n in _type_ii_instances():
        pre.append(scaled(n, fm.type_ii_coefficients(source, n), x))
        want.append(fm.type_ii_coefficients(target, n)(x))
    return pre, want


def _type_i_values(source, target, scaled: Callable) -> tuple[list, list]:
    x = to_real(SAMPLE_X)
    pre, want = [], []
    for n, i in _type_i_instances():
        pre.append(scaled(n, i, fm.type_i_coefficients(source, n, i), x))
        want.append(fm.type_i_coefficients(target, n, i)(x))
    return pre, want


def _recurrence_values(source, target, b0_map: Callable, bj_map: Callable) -> tuple[list, list]:
    pre, want = [], []
    pi = cb.identity(2)
    for n in cb.box(2, 2):
        for k in (1, 2):
            got = fm.nn_coefficients(source, n, k, pi)
            ref = fm.nn_coefficients(target, n, k, pi)
            pre.append(b0_map(got.b0))
            want.append(ref.b0)
            for j in (1, 2):
                pre.append(bj_map(j, got.bj[j - 1]))
                want.append(ref.bj[j - 1])
    return pre, want


def _jp_laguerre1_ii(s):
    return _type_ii_values(
        _jp_for_laguerre1(s), fm.LaguerreFirst(LAGUERRE1_ALPHAS), lambda n, b, x: s ** sum(n) * b(x / s)
    )


def _jp_laguerre1_i(s):
    a = [to_real(v) for v in LAGUERRE1_ALPHAS]
    return _type_i_values(
        _jp_for_laguerre1(s),
        fm.LaguerreFirst(LAGUERRE1_ALPHAS),
        lambda n, i, p, x: p(x / s) / s ** (a[i - 1] + sum(n)),
    )


def _jp_laguerre2_ii(t):
    return _type_ii_values(
        _jp_for_laguerre2(t),
        fm.LaguerreSecond(LAGUERRE2_ALPHA0, LAGUERRE2_CS),
        lambda n, b, x: (-t) ** sum(n) * b(1 - x / t),
    )


def _jp_laguerre2_i(t):
    a0 = to_real(LAGUERRE2_ALPHA0)
    return _type_i_values(
        _jp_for_laguerre2(t),
        fm.LaguerreSecond(LAGUERRE2_ALPHA0, LAGUERRE2_CS),
        lambda n, i, p, x: (-1) ** (sum(n) - 1) * p(1 - x / t) / t ** (a0 + sum(n)),
    )


def _jp_hermite_ii(s):
    r = mpmath.sqrt(s)
    return _type_ii_values(
        _jp_for_hermite(s),
        fm.HermiteMultiple(HERMITE_CS),
        lambda n, b, x: (2 * r) ** sum(n) * b((x + r) / (2 * r)),
    )


def _jp_hermite_i(s):
    r = mpmath.sqrt(s)
    c = [to_real(v) for v in HERMITE_CS]
    return _type_i_values(
        _jp_for_hermite(s),
        fm.HermiteMultiple(HERMITE_CS),
        lambda n, i, p, x: p((x + r) / (2 * r)) / ((2 * r) ** sum(n) * mpmath.mpf(2) ** (2 * s + c[i - 1] * r)),
    )


def _laguerre1_hermite_ii(s):
    r = mpmath.sqrt(2 * s)
    return _type_ii_values(
        _laguerre1_for_hermite(s),
        fm.HermiteMultiple(HERMITE_CS),
        lambda n, b, x: b(r * x + s) / r ** sum(n),
    )


def _laguerre1_hermite_i(s):
    r = mpmath.sqrt(2 * s)
    h = mpmath.sqrt(s / 2)
    c = [to_real(v) for v in HERMITE_CS]
    return _type_i_values(
        _laguerre1_for_hermite(s),
        fm.HermiteMultiple(HERMITE_CS),
        lambda n, i, p, x: r ** sum(n) * s ** (s + c[i - 1] * h) * mpmath.exp(-s) * p(r * x + s),
    )


def _jp_laguerre1_rec(s):
    return _recurrence_values(
        _jp_for_laguerre1(s), fm.LaguerreFirst(LAGUERRE1_ALPHAS), lambda b: s * b, lambda j, b: s ** (j + 1) * b
    )


def _jp_laguerre2_rec(t):
    return _recurrence_values(
        _jp_for_laguerre2(t),
        fm.LaguerreSecond(LAGUERRE2_ALPHA0, LAGUERRE2_CS),
        lambda b: -t * (b - 1),
        lambda j, b: (-t) ** (j + 1) * b,
    )


def _jp_hermite_rec(s):
    r = mpmath.sqrt(s)
    return _recurrence_values(
        _jp_for_hermite(s),
        fm.HermiteMultiple(HERMITE_CS),
        lambda b: r * (2 * b - 1),
        lambda j, b: (2 * r) ** (j + 1) * b,
    )


def _laguerre1_hermite_rec(s):
    r = mpmath.sqrt(2 * s)
    return _recurrence_values(
        _laguerre1_for_hermite(s),
        fm.HermiteMultiple(HERMITE_CS),
        lambda b: (b - s) / r,
        lambda j, b: b / r ** (j + 1),
    )


@dataclass(frozen=True)
class LimitRelation:
    name: str
    evaluate: Callable
    ratio_bound: float
    description: str


_INV_T = 1e-3
_INV_SQRT = 1e-1

RELATIONS = {
    r.name: r
    for r in (
        LimitRelation("jp-laguerre1-ii", _jp_laguerre1_ii, _INV_T, "beta^|n| P_n(x/beta)"),
        LimitRelation("jp-laguerre1-i", _jp_laguerre1_i, _INV_T, "beta^-(alpha_i+|n|) P^(i)_n(x/beta)"),
        LimitRelation("jp-laguerre2-ii", _jp_laguerre2_ii, _INV_T, "(-t)^|n| P_n(1-x/t; c t, alpha0)"),
        LimitRelation("jp-laguerre2-i", _jp_laguerre2_i, _INV_T, "(-1)^(|n|-1) t^-(alpha0+|n|) P^(i)_n(1-x/t)"),
        LimitRelation("jp-hermite-ii", _jp_hermite_ii, _INV_SQRT, "(2 sqrt b)^|n| P_n((x+sqrt b)/(2 sqrt b))"),
        LimitRelation("jp-hermite-i", _jp_hermite_i, _INV_SQRT, "P^(i)_n((x+sqrt b)/(2 sqrt b)) / ((2 sqrt b)^|n| 2^(2b+c_i sqrt b))"),
        LimitRelation("laguerre1-hermite-ii", _laguerre1_hermite_ii, _INV_SQRT, "L_n(sqrt(2b) x + b) / sqrt(2b)^|n|"),
        LimitRelation("laguerre1-hermite-i", _laguerre1_hermite_i, _INV_SQRT, "sqrt(2b)^|n| b^(b+c_i sqrt(b/2)) e^-b L^(i)_n(sqrt(2b) x + b)"),
        LimitRelation("jp-laguerre1-recurrence", _jp_laguerre1_rec, _INV_T, "beta^(j+1) b^j"),
        LimitRelation("jp-laguerre2-recurrence", _jp_laguerre2_rec, _INV_T, "-t (b0 - 1), (-t)^(j+1) b^j"),
        LimitRelation("jp-hermite-recurrence", _jp_hermite_rec, _INV_SQRT, "sqrt b (2 b0 - 1), (2 sqrt b)^(j+1) b^j"),
        LimitRelation("laguerre1-hermite-recurrence", _laguerre1_hermite_rec, _INV_SQRT, "(b0 - b)/sqrt(2b), b^j / sqrt(2b)^(j+1)"),
    )
}

POLYNOMIAL_RELATIONS = tuple(name for name in RELATIONS if not name.endswith("recurrence"))


def _max_error(relation: LimitRelation, scale) -> tuple[mpmath.mpf, list]:
    pre, want = relation.evaluate(to_real(scale))
    return max(relative_error(a, b) for a, b in zip(pre, want)), pre


def limit_error(relation: str, scale, guard_bits: int = 64) -> mpmath.mpf:
    """Worst ``re(prelimit, target)`` over the fixed instance at one scale.

    The pre-limit values are recomputed with ``guard_bits`` more precision;
    if rounding moves them by more than 1/1000 of the measured error, the
    precision is doubled once before giving up with :class:`PrecisionExhausted`.
    """
    rel = RELATIONS[relation]
    bits = mpmath.mp.prec
    for attempt in range(2):
        with working_precision(bits):
            err, pre = _max_error(rel, scale)
        with working_precision(bits + guard_bits):
            _, ref = _max_error(rel, scale)
        with working_precision(bits):
            noise = max(relative_error(a, b) for a, b in zip(pre, ref))
        if noise * 1000 <= err:
            return err
        bits *= 2
    raise PrecisionExhausted(f"{relation} at scale {scale}: rounding noise {mpmath.nstr(noise, 3)} vs error {mpmath.nstr(err, 3)}")


def check_limits(relation: str, scales=SCALES, precision: int = LIMIT_PRECISION) -> CheckReport:
    """Two-point decay: ``err(s2) < err(s1)`` and ``err(s2)/err(s1) <= ratio_bound``."""
    rel = RELATIONS[relation]
    s1, s2 = scales
    with working_precision(max(precision, mpmath.mp.prec)):
        e1 = limit_error(relation, s1)
        e2 = limit_error(relation, s2)
        ratio = e2 / e1 if e1 else mpmath.inf
        bound = mpmath.mpf(repr(rel.ratio_bound))
        passed = bool(e2 < e1 and ratio <= bound)
        return CheckReport(
            f"limit:{relation}",
            f"{rel.description} scales={s1},{s2} x={SAMPLE_X}",
            e2,
            ratio,
            bound,
            passed,
            2,
            f"err({s1})={mpmath.nstr(e1, 5)} err({s2})={mpmath.nstr(e2, 5)}",
        )

"""Multiple Laguerre polynomials of the second kind: weights ``x**alpha0 exp(-c_i x)``."""

from __future__ import annotations

import itertools
import math

import mpmath

from .. import combinatorics as cb
from ..arith import gamma, to_real
from ..polynomial import Polynomial
from . import core
from ._common import bounded_indices, prod, reals, rising, signed_binomial
from .params import LaguerreSecond


@core.moment.register
def _moment(params: LaguerreSecond, i: int, k: int) -> mpmath.mpf:
    core.check_weight_index(params, i)
    a0 = to_real(params.alpha0)
    c = to_real(params.cs[i - 1])
    return gamma(a0 + 1) * rising(a0 + 1, k) / c ** (a0 + k + 1)


@core.type_ii_coefficients.register
def _type_ii(params: LaguerreSecond, n) -> Polynomial:
    n = core.check_multi_index(params, n)
    a0 = to_real(params.alpha0)
    c = reals(params.cs)
    p, N = params.p, sum(n)
    const = mpmath.mpf(-1) ** N * rising(a0 + 1, N)

    def terms():
        for ls in itertools.product(*(range(v + 1) for v in n)):
            L = sum(ls)
            t = const / rising(a0 + 1, L)
            for q in range(p):
                t *= signed_binomial(n[q], ls[q]) * c[q] ** (ls[q] - n[q])
            yield L, t

    return Polynomial.from_terms(terms())


@core.type_i_coefficients.register
def _type_i(params: LaguerreSecond, n, i: int) -> Polynomial:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, i)
    if n[i - 1] == 0:
        return Polynomial.zero()
    a0 = to_real(params.alpha0)
    c = reals(params.cs)
    p, N = params.p, sum(n)
    ci, ni = c[i - 1], n[i - 1]
    others = [q for q in range(p) if q != i - 1]
    shifted = a0 + N - ni + 1

    k = mpmath.mpf(-1) ** (ni - 1) * ci ** (a0 + N) * rising(shifted, ni - 1)
    k /= math.factorial(ni - 1) * gamma(a0 + N)
    k *= prod((c[q] / (c[q] - ci)) ** n[q] for q in others)

    def terms():
        for ls in bounded_indices([ni - 1] * p, ni - 1):
            L = sum(ls)
            t = rising(mpmath.mpf(1 - ni), L) / rising(shifted, L) * ci**L
            t /= math.factorial(ls[i - 1])
            for q in others:
                t *= rising(mpmath.mpf(n[q]), ls[q]) / (math.factorial(ls[q]) * (ci - c[q]) ** ls[q])
            yield ls[i - 1], k * t

    return Polynomial.from_terms(terms())


@core.nn_coefficients.register
def _nn(params: LaguerreSecond, n, k: int, pi) -> core.NNCoefficients:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, k)
    pi = core.check_permutation(params, pi)
    a0 = to_real(params.alpha0)
    c = reals(params.cs)
    p, N = params.p, sum(n)

    b0 = (a0 + N + 1) / c[k - 1] + sum(n[i] / c[i] for i in range(p))
    bj = []
    for j in range(1, p + 1):
        S = sorted(q - 1 for q in cb.s_set(pi, j))
        Sc = [q for q in range(p) if q not in S]
        total = mpmath.mpf(0)
        for i in S:
            total += n[i] / c[i] ** (j + 1) * prod((c[i] - c[q]) / c[q] for q in Sc)
        bj.append((-1) ** (j + 1) * rising(a0 + N - j + 1, j) * total)
    return core.NNCoefficients(b0, tuple(bj))


@core.step_line_coefficients.register
def _step_line(params: LaguerreSecond, n: int, j: int) -> mpmath.mpf:
    p = params.p
    m, k = core.step_line_split(n, p, j)
    if n - j < 0:
        return mpmath.mpf(0)
    a0 = to_real(params.alpha0)
    c = [None] + reals(params.cs)

    if j == 0:
        out = (a0 + p * m + k + 1) / c[k + 1]
        out += sum((m + 1) / c[i] for i in range(1, k + 1))
        out += sum(m / c[i] for i in range(k + 1, p + 1))
        return out

    pre = (-1) ** (j + 1) * rising(a0 + p * m + k - j + 1, j)
    total = mpmath.mpf(0)
    if j <= k:
        def ratio(i):
            return prod((c[i] - c[q]) / c[q] for q in range(k + 2 - j, k + 1))

        total += sum((m + 1) / c[i] ** (j + 1) * ratio(i) for i in range(1, k + 2 - j))
        total += sum(m / c[i] ** (j + 1) * ratio(i) for i in range(k + 1, p + 1))
    else:
        for i in range(k + 1, p + k + 2 - j):
            t = m / c[i] ** (j + 1)
            t *= prod((c[i] - c[q]) / c[q] for q in range(1, k + 1))
            t *= prod((c[i] - c[q]) / c[q] for q in range(p + k + 2 - j, p + 1))
            total += t
    return pre * total

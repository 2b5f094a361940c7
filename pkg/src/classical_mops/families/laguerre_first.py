"""Multiple Laguerre polynomials of the first kind: weights ``x**alpha_i exp(-x)``."""

from __future__ import annotations

import itertools
import math

import mpmath

from .. import combinatorics as cb
from ..arith import gamma, to_real
from ..polynomial import Polynomial
from . import core
from ._common import prod, reals, rising, rising_table, signed_binomial, suffix_sums
from .params import LaguerreFirst


@core.moment.register
def _moment(params: LaguerreFirst, i: int, k: int) -> mpmath.mpf:
    core.check_weight_index(params, i)
    a = to_real(params.alphas[i - 1])
    return gamma(a + 1) * rising(a + 1, k)


@core.type_ii_coefficients.register
def _type_ii(params: LaguerreFirst, n) -> Polynomial:
    n = core.check_multi_index(params, n)
    a = reals(params.alphas)
    p, N = params.p, sum(n)

    const = mpmath.mpf(-1) ** N * prod(rising(a[q] + 1, n[q]) for q in range(p))
    first = [1 / v for v in rising_table(a[0] + 1, N)]
    g = []
    for q in range(p - 1):
        up = rising_table(a[q] + n[q] + 1, N)
        down = rising_table(a[q + 1] + 1, N)
        g.append([u / d for u, d in zip(up, down)])

    def terms():
        for ls in itertools.product(*(range(v + 1) for v in n)):
            L = suffix_sums(ls)
            c = const * prod(signed_binomial(n[q], ls[q]) for q in range(p)) * first[L[0]]
            c *= prod(g[q][L[q + 1]] for q in range(p - 1))
            yield L[0], c

    return Polynomial.from_terms(terms())


@core.type_i_coefficients.register
def _type_i(params: LaguerreFirst, n, i: int) -> Polynomial:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, i)
    if n[i - 1] == 0:
        return Polynomial.zero()
    a = reals(params.alphas)
    p, N = params.p, sum(n)
    ai, ni = a[i - 1], n[i - 1]
    others = [q for q in range(p) if q != i - 1]

    k = mpmath.mpf(-1) ** (N - 1)
    k /= math.factorial(ni - 1) * prod(rising(a[q] - ai, n[q]) for q in others) * gamma(ai + 1)
    coeffs = []
    for l in range(ni):
        t = rising(mpmath.mpf(1 - ni), l) / (math.factorial(l) * rising(ai + 1, l))
        for q in others:
            t *= rising(ai - a[q] - n[q] + 1, l) / rising(ai - a[q] + 1, l)
        coeffs.append(k * t)
    return Polynomial(tuple(coeffs))


@core.nn_coefficients.register
def _nn(params: LaguerreFirst, n, k: int, pi) -> core.NNCoefficients:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, k)
    pi = core.check_permutation(params, pi)
    a = reals(params.alphas)
    p = params.p
    ak, nk = a[k - 1], n[k - 1]

    b0 = ak + nk + 1
    for q in range(p):
        b0 *= (ak - a[q] + nk + 1) / (ak - a[q] + nk + 1 - n[q])
    for i in range(p):
        t = (a[i] + n[i]) / (a[i] - ak - nk + n[i] - 1)
        t *= prod(a[i] - a[q] + n[i] for q in range(p))
        t /= prod(a[i] - a[q] + n[i] - n[q] for q in range(p) if q != i)
        b0 += t

    bj = []
    for j in range(1, p + 1):
        S = sorted(q - 1 for q in cb.s_set(pi, j))
        total = mpmath.mpf(0)
        for i in S:
            t = (a[i] + n[i]) * prod(a[i] - a[q] + n[i] for q in range(p))
            t /= prod(a[i] - a[q] + n[i] - n[q] for q in S if q != i)
            total += t
        bj.append(total)
    return core.NNCoefficients(b0, tuple(bj))


@core.step_line_coefficients.register
def _step_line(params: LaguerreFirst, n: int, j: int) -> mpmath.mpf:
    p = params.p
    m, k = core.step_line_split(n, p, j)
    if n - j < 0:
        return mpmath.mpf(0)
    a = reals(params.alphas)

    def ext(q):
        return to_real(cb.extended_alpha(a, q))

    window = range(k + 1, p + k + 2 - j)
    total = mpmath.mpf(0)
    for i in window:
        ai = ext(i)
        t = (ai + m) * prod(ai - a[q] + m for q in range(p))
        t /= prod(ai - ext(q) for q in window if q != i)
        total += t
    return total

"""Multiple Hermite polynomials: weights ``exp(-x**2 + c_i x)`` on the real line."""

from __future__ import annotations

import itertools
import math

import mpmath

from .. import combinatorics as cb
from ..arith import to_real
from ..polynomial import Polynomial
from . import core
from ._common import bounded_indices, prod, reals, rising, signed_binomial
from .params import HermiteMultiple


def classical_hermite(n: int) -> Polynomial:
    """Monic Hermite polynomial orthogonal for ``exp(-x**2)``."""
    if n < 0:
        return Polynomial.zero()
    return Polynomial.from_terms(
        (n - 2 * k, mpmath.mpf((-1) ** k * math.factorial(n)) / (math.factorial(n - 2 * k) * math.factorial(k) * 4**k))
        for k in range(n // 2 + 1)
    )


@core.moment.register
def _moment(params: HermiteMultiple, i: int, k: int) -> mpmath.mpf:
    core.check_weight_index(params, i)
    c = to_real(params.cs[i - 1])
    half = c / 2
    total = mpmath.mpf(0)
    for j in range(0, k + 1, 2):
        total += math.comb(k, j) * half ** (k - j) * rising(mpmath.mpf(1) / 2, j // 2)
    return mpmath.sqrt(mpmath.pi) * mpmath.exp(c * c / 4) * total


@core.type_ii_coefficients.register
def _type_ii(params: HermiteMultiple, n) -> Polynomial:
    n = core.check_multi_index(params, n)
    c = reals(params.cs)
    p, N = params.p, sum(n)
    weights: dict[int, mpmath.mpf] = {}
    for ls in itertools.product(*(range(v + 1) for v in n)):
        L = sum(ls)
        t = mpmath.mpf(2) ** L
        for q in range(p):
            t *= signed_binomial(n[q], ls[q]) * c[q] ** (n[q] - ls[q])
        weights[L] = weights.get(L, mpmath.mpf(0)) + t
    scale = (-mpmath.mpf(1) / 2) ** N
    out = Polynomial.zero()
    for L, w in sorted(weights.items()):
        out = out + classical_hermite(L) * (scale * w)
    return out


@core.type_i_coefficients.register
def _type_i(params: HermiteMultiple, n, i: int) -> Polynomial:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, i)
    if n[i - 1] == 0:
        return Polynomial.zero()
    c = reals(params.cs)
    p, N = params.p, sum(n)
    ci, ni = c[i - 1], n[i - 1]
    others = [q for q in range(p) if q != i - 1]

    k = mpmath.mpf(-1) ** (ni - 1) / (mpmath.sqrt(mpmath.pi) * math.factorial(ni - 1))
    k *= mpmath.mpf(2) ** (N - 1) * mpmath.exp(-ci * ci / 4)
    k /= prod((ci - c[q]) ** n[q] for q in others)
    h_at = [classical_hermite(d)(ci / 2) for d in range(ni)]

    def terms():
        for ls in bounded_indices([ni - 1] * p, ni - 1):
            L = sum(ls)
            t = rising(mpmath.mpf(1 - ni), L) / math.factorial(ls[i - 1])
            for q in others:
                t *= rising(mpmath.mpf(n[q]), ls[q]) / (math.factorial(ls[q]) * (c[q] - ci) ** ls[q])
            yield ls[i - 1], k * t * h_at[ni - 1 - L]

    return Polynomial.from_terms(terms())


@core.nn_coefficients.register
def _nn(params: HermiteMultiple, n, k: int, pi) -> core.NNCoefficients:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, k)
    pi = core.check_permutation(params, pi)
    c = reals(params.cs)
    p = params.p
    bj = []
    for j in range(1, p + 1):
        S = sorted(q - 1 for q in cb.s_set(pi, j))
        Sc = [q for q in range(p) if q not in S]
        total = sum((n[i] * prod(c[i] - c[q] for q in Sc) for i in S), mpmath.mpf(0))
        bj.append(total / mpmath.mpf(2) ** j)
    return core.NNCoefficients(c[k - 1] / 2, tuple(bj))


@core.step_line_coefficients.register
def _step_line(params: HermiteMultiple, n: int, j: int) -> mpmath.mpf:
    p = params.p
    m, k = core.step_line_split(n, p, j)
    if n - j < 0:
        return mpmath.mpf(0)
    c = [None] + reals(params.cs)
    if j == 0:
        return c[k + 1] / 2
    total = mpmath.mpf(0)
    if j <= k:
        def span(i):
            return prod(c[i] - c[q] for q in range(k + 2 - j, k + 1))

        total += sum((m + 1) * span(i) for i in range(1, k + 2 - j))
        total += sum(m * span(i) for i in range(k + 1, p + 1))
    else:
        for i in range(k + 1, p + k + 2 - j):
            t = m * prod(c[i] - c[q] for q in range(1, k + 1))
            total += t * prod(c[i] - c[q] for q in range(p + k + 2 - j, p + 1))
    return total / mpmath.mpf(2) ** j

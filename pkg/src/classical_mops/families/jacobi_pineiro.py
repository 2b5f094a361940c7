"""Jacobi-Piñeiro polynomials: weights ``x**alpha_i (1-x)**beta`` on ``[0, 1]``."""

from __future__ import annotations

import itertools
import math
from typing import Iterator

import mpmath

from .. import combinatorics as cb
from ..arith import gamma, to_real
from ..polynomial import Polynomial
from . import core
from ._common import prod, reals, rising, rising_table, signed_binomial, suffix_sums
from .params import JacobiPineiro


@core.moment.register
def _moment(params: JacobiPineiro, i: int, k: int) -> mpmath.mpf:
    core.check_weight_index(params, i)
    a = to_real(params.alphas[i - 1])
    b = to_real(params.beta)
    base = gamma(b + 1) * gamma(a + 1) / gamma(a + b + 2)
    return base * rising(a + 1, k) / rising(a + b + 2, k)


def type_ii_terms(params: JacobiPineiro, n) -> Iterator[tuple[tuple[int, ...], mpmath.mpf]]:
    """Yield ``(l, C^l)`` so that ``B_n(x) = sum_l C^l x**|l|``.

    Every factor depends on one entry ``l_q`` or on a suffix sum
    ``l_q + ... + l_p``, so the factors are tabulated up front.
    """
    n = core.check_multi_index(params, n)
    a = reals(params.alphas)
    b = to_real(params.beta)
    p, N = params.p, sum(n)
    prefix = list(itertools.accumulate(n))

    const = mpmath.mpf(-1) ** N
    for q in range(p):
        const *= rising(a[q] + 1, n[q]) / rising(a[q] + b + N + 1, n[q])

    f = []
    for q in range(p):
        up = rising_table(a[q] + b + prefix[q] + 1, N)
        down = rising_table(a[q] + 1, N)
        f.append([u / d for u, d in zip(up, down)])
    g = []
    for q in range(p - 1):
        up = rising_table(a[q] + n[q] + 1, N)
        down = rising_table(a[q] + b + prefix[q] + 1, N)
        g.append([u / d for u, d in zip(up, down)])

    for ls in itertools.product(*(range(v + 1) for v in n)):
        L = suffix_sums(ls)
        c = const * prod(signed_binomial(n[q], ls[q]) for q in range(p))
        c *= prod(f[q][L[q]] for q in range(p))
        c *= prod(g[q][L[q + 1]] for q in range(p - 1))
        yield ls, c


@core.type_ii_coefficients.register
def _type_ii(params: JacobiPineiro, n) -> Polynomial:
    return Polynomial.from_terms((sum(ls), c) for ls, c in type_ii_terms(params, n))


@core.type_i_coefficients.register
def _type_i(params: JacobiPineiro, n, i: int) -> Polynomial:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, i)
    if n[i - 1] == 0:
        return Polynomial.zero()
    a = reals(params.alphas)
    b = to_real(params.beta)
    p, N = params.p, sum(n)
    ai, ni = a[i - 1], n[i - 1]
    others = [q for q in range(p) if q != i - 1]

    k = mpmath.mpf(-1) ** (N - 1)
    k *= prod(rising(a[q] + b + N, n[q]) for q in range(p))
    k /= math.factorial(ni - 1) * prod(rising(a[q] - ai, n[q]) for q in others)
    k *= gamma(ai + b + N) / (gamma(b + N) * gamma(ai + 1))

    coeffs = []
    for l in range(ni):
        t = rising(mpmath.mpf(1 - ni), l) * rising(ai + b + N, l)
        t /= math.factorial(l) * rising(ai + 1, l)
        for q in others:
            t *= rising(ai - a[q] - n[q] + 1, l) / rising(ai - a[q] + 1, l)
        coeffs.append(k * t)
    return Polynomial(tuple(coeffs))


@core.nn_coefficients.register
def _nn(params: JacobiPineiro, n, k: int, pi) -> core.NNCoefficients:
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, k)
    pi = core.check_permutation(params, pi)
    a = reals(params.alphas)
    b = to_real(params.beta)
    p, N = params.p, sum(n)
    ak, nk = a[k - 1], n[k - 1]

    first = (ak + nk + 1) / (ak + b + nk + N + 2)
    for q in range(p):
        first *= (ak - a[q] + nk + 1) / (ak - a[q] + nk + 1 - n[q])
    second = mpmath.mpf(0)
    for i in range(p):
        t = (a[i] + n[i]) * (ak + b + nk + N + 1)
        t /= rising(a[i] + b + n[i] + N, 2) * (a[i] - ak - nk + n[i] - 1)
        t *= prod(a[i] - a[q] + n[i] for q in range(p))
        t /= prod(a[i] - a[q] + n[i] - n[q] for q in range(p) if q != i)
        second += t
    b0 = first + second

    bj = []
    for j in range(1, p + 1):
        S = sorted(q - 1 for q in cb.s_set(pi, j))
        Sc = [q for q in range(p) if q not in S]
        shift = b + N - j
        pre = rising(shift + 1, j)
        for q in range(p):
            pre *= rising(a[q] + shift + 1, j) / rising(a[q] + shift + n[q] + 1, j)
        total = mpmath.mpf(0)
        for i in S:
            t = (a[i] + n[i]) / rising(a[i] + shift + n[i], j + 2)
            t *= prod(a[i] - a[q] + n[i] for q in range(p))
            t /= prod(a[i] - a[q] + n[i] - n[q] for q in S if q != i)
            t /= prod(a[q] + shift + n[q] for q in Sc)
            total += t
        bj.append(pre * total)
    return core.NNCoefficients(b0, tuple(bj))


@core.step_line_coefficients.register
def _step_line(params: JacobiPineiro, n: int, j: int) -> mpmath.mpf:
    p = params.p
    m, k = core.step_line_split(n, p, j)
    if n - j < 0:
        return mpmath.mpf(0)
    a = reals(params.alphas)
    b = to_real(params.beta)

    def ext(q):
        return to_real(cb.extended_alpha(a, q))

    M = (p + 1) * m
    head = ext(k + 1) + b + M + k + 1 - j
    head /= prod(ext(q) + b + M + k - j for q in range(p + k + 2 - j, p + k + 2))
    mid = rising(b + p * m + k + 1 - j, j)
    mid *= prod(rising(a[q] + b + p * m + k + 1 - j, j) for q in range(p))
    mid /= prod(rising(ext(q) + b + M + k + 1 - j, j) for q in range(k + 1, p + k + 1))
    window = range(k + 1, p + k + 2 - j)
    total = mpmath.mpf(0)
    for i in window:
        ai = ext(i)
        t = (ai + m) / rising(ai + b + M + k - j, j + 2)
        t *= prod(ai - a[q] + m for q in range(p))
        t /= prod(ai - ext(q) for q in window if q != i)
        total += t
    return head * mid * total


def jp_lemma_brute_force(params: JacobiPineiro, n, i: int, m: int, terms=None) -> mpmath.mpf:
    """Brute-force ``sum_l C^l (alpha_i+n_i+m)_|l| / (alpha_i+beta+n_i+m+1)_|l|``.

    ``terms`` may carry a precomputed ``list(type_ii_terms(params, n))``.
    """
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, i)
    ai = to_real(params.alphas[i - 1])
    b = to_real(params.beta)
    N, ni = sum(n), n[i - 1]
    up = rising_table(ai + ni + m, N)
    down = rising_table(ai + b + ni + m + 1, N)
    total = mpmath.mpf(0)
    for ls, c in terms if terms is not None else type_ii_terms(params, n):
        L = sum(ls)
        total += c * up[L] / down[L]
    return total


def jp_lemma_closed_form(params: JacobiPineiro, n, i: int, m: int) -> mpmath.mpf:
    """Closed form of :func:`jp_lemma_brute_force`."""
    n = core.check_multi_index(params, n)
    core.check_weight_index(params, i)
    a = reals(params.alphas)
    b = to_real(params.beta)
    N, ai, ni = sum(n), a[i - 1], n[i - 1]
    out = mpmath.mpf(-1) ** N * rising(b + 1, N) / rising(ai + b + ni + m + 1, N)
    for q in range(params.p):
        out *= rising(a[q] - ai - ni - m + 1, n[q]) / rising(a[q] + b + N + 1, n[q])
    return out

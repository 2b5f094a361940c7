"""Pass/fail checks of the closed forms against the oracle and against each other.

Every check returns a :class:`CheckReport`.  Deviations are measured with
``re(a, b) = |a - b| / max(1, |a|, |b|)`` unless stated otherwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from . import combinatorics as cb
from . import families as fm
from .arith import (
    DEFAULT_PRECISION,
    kampe_de_feriet,
    pochhammer,
    relative_error,
    to_decimal,
    to_real,
)
from .errors import InvalidParams
from .families.jacobi_pineiro import type_ii_terms
from .oracle import MomentSystem
from .polynomial import Polynomial


def default_tolerance(bits: int | None = None) -> mpmath.mpf:
    """``1e-30`` at 256 bits, otherwise ``2**(156 - bits)``."""
    bits = mpmath.mp.prec if bits is None else bits
    if bits == DEFAULT_PRECISION:
        return mpmath.mpf("1e-30")
    return mpmath.ldexp(mpmath.mpf(1), 156 - bits)


@dataclass
class CheckReport:
    name: str
    instance: str
    max_abs: mpmath.mpf
    max_rel: mpmath.mpf
    tolerance: mpmath.mpf
    passed: bool
    comparisons: int = 0
    worst: str = ""

    def to_dict(self, bits: int | None = None) -> dict:
        return {
            "name": self.name,
            "instance": self.instance,
            "max_abs": to_decimal(self.max_abs, bits),
            "max_rel": to_decimal(self.max_rel, bits),
            "tolerance": to_decimal(self.tolerance, bits),
            "passed": self.passed,
            "comparisons": self.comparisons,
            "worst": self.worst,
        }


@dataclass
class Tracker:
    """Accumulates the worst deviation seen by one check."""

    name: str
    instance: str
    tolerance: mpmath.mpf
    max_abs: mpmath.mpf = field(default_factory=lambda: mpmath.mpf(0))
    max_rel: mpmath.mpf = field(default_factory=lambda: mpmath.mpf(0))
    count: int = 0
    worst: str = ""

    def record(self, dev_abs, dev_rel, where: str) -> None:
        self.count += 1
        self.max_abs = max(self.max_abs, dev_abs)
        if dev_rel > self.max_rel or self.count == 1:
            self.max_rel = max(self.max_rel, dev_rel)
            self.worst = where

    def scalar(self, got, want, where: str = "") -> None:
        got, want = to_real(got), to_real(want)
        self.record(abs(got - want), relative_error(got, want), where)

    def absolute(self, got, want, where: str = "") -> None:
        d = abs(to_real(got) - to_real(want))
        self.record(d, d, where)

    def polynomial(self, got: Polynomial, want: Polynomial, where: str = "") -> None:
        """Coefficientwise ``re`` over the coefficient vector."""
        for d in range(max(len(got.coeffs), len(want.coeffs))):
            self.scalar(got.coeff(d), want.coeff(d), f"{where} x^{d}")

    def residual(self, res: Polynomial, scale, where: str = "") -> None:
        """Coefficients of ``res`` relative to ``scale`` (the largest coefficient involved)."""
        scale = to_real(scale)
        for d, c in enumerate(res.coeffs):
            self.record(abs(c), abs(c) / scale if scale else abs(c), f"{where} x^{d}")
        if res.is_zero:
            self.count += 1

    def report(self) -> CheckReport:
        return CheckReport(
            self.name,
            self.instance,
            self.max_abs,
            self.max_rel,
            self.tolerance,
            bool(self.max_rel <= self.tolerance),
            self.count,
            self.worst,
        )


def describe_instance(params, **extra) -> str:
    d = fm.describe(params)
    parts = [d.pop("family")] + [f"{k}={v}" for k, v in d.items()]
    parts += [f"{k}={v}" for k, v in extra.items()]
    return " ".join(str(p) for p in parts)


def resolve_tolerance(tolerance):
    return default_tolerance() if tolerance is None else to_real(tolerance)


def canonical_permutations(p: int, seed: int = 0) -> list[cb.Permutation]:
    """Identity, reverse and one seeded random permutation (deduplicated)."""
    rng = random.Random(seed)
    images = list(range(1, p + 1))
    rng.shuffle(images)
    out = []
    for pi in (cb.identity(p), cb.reverse(p), tuple(images)):
        if pi not in out:
            out.append(pi)
    return out


def _type_ii_or_zero(params, n) -> Polynomial:
    return fm.type_ii_coefficients(params, n) if cb.is_valid(n) else Polynomial.zero()


def _scale(polys: Iterable[Polynomial]) -> mpmath.mpf:
    return max((q.max_abs_coeff() for q in polys), default=mpmath.mpf(0))


# ---------------------------------------------------------------- polynomials


def check_polynomials_vs_oracle(params, nmax: int, tolerance=None) -> CheckReport:
    """Closed-form type I and type II polynomials against the moment solves."""
    t = Tracker("polynomials_vs_oracle", describe_instance(params, nmax=nmax), resolve_tolerance(tolerance))
    ms = MomentSystem(params)
    for n in cb.multi_indices(params.p, nmax):
        t.polynomial(fm.type_ii_coefficients(params, n), ms.solve_type_ii(n), f"B{n}")
        if sum(n) == 0:
            continue
        for i, a in enumerate(ms.solve_type_i(n), start=1):
            t.polynomial(fm.type_i_coefficients(params, n, i), a, f"A{i}{n}")
    return t.report()


def check_orthogonality(params, nmax: int, tolerance=None) -> CheckReport:
    """Defining conditions of both types, using closed forms and moments only."""
    t = Tracker("orthogonality", describe_instance(params, nmax=nmax), resolve_tolerance(tolerance))
    ms = MomentSystem(params)
    for n in cb.multi_indices(params.p, nmax):
        b = fm.type_ii_coefficients(params, n)
        t.absolute(b.leading, 1, f"monic B{n}")
        for i in range(1, params.p + 1):
            scale = max(mpmath.mpf(1), max((abs(c * ms.moment(i, d)) for d, c in enumerate(b.coeffs))))
            for j in range(n[i - 1]):
                t.absolute(ms.integrate(b, i, j) / scale, 0, f"B{n} w{i} x^{j}")
        N = sum(n)
        if N == 0:
            continue
        a_list = fm.type_i_all(params, n)
        for i, a in enumerate(a_list, start=1):
            if n[i - 1] and a.degree != n[i - 1] - 1:
                t.absolute(1, 0, f"degree A{i}{n}")
        for j in range(N):
            val = sum((ms.integrate(a, i, j) for i, a in enumerate(a_list, start=1)), mpmath.mpf(0))
            if j == N - 1:
                t.scalar(val, 1, f"A{n} x^{j}")
            else:
                t.absolute(val, 0, f"A{n} x^{j}")
    return t.report()


def check_biorthogonality(params, nmax: int, tolerance=None) -> CheckReport:
    """``sum_i integral B_n A^(i)_m w_i`` is 0 for ``m <= n``, 1 for ``|m| = |n|+1``, 0 for ``|m| > |n|+1``."""
    t = Tracker("biorthogonality", describe_instance(params, nmax=nmax), resolve_tolerance(tolerance))
    ms = MomentSystem(params)
    indices = list(cb.multi_indices(params.p, nmax))
    typ2 = {n: fm.type_ii_coefficients(params, n) for n in indices}
    typ1 = {m: fm.type_i_all(params, m) for m in indices if sum(m) >= 1}
    for n in indices:
        for m, a_list in typ1.items():
            if cb.componentwise_le(m, n):
                want = 0
            elif sum(m) == sum(n) + 1:
                want = 1
            elif sum(m) > sum(n) + 1:
                want = 0
            else:
                continue
            val = ms.pair(typ2[n], a_list)
            if want:
                t.scalar(val, 1, f"B{n} A{m}")
            else:
                t.absolute(val, 0, f"B{n} A{m}")
    return t.report()


# ----------------------------------------------------------------- recurrences


def check_recurrence_residuals(
    params, nmax: int, permutations: Sequence | None = None, tolerance=None
) -> CheckReport:
    """Both nearest-neighbour relations as polynomial identities.

    Type II: ``x B_n - B_{n+e_k} - b0_n(k) B_n - sum_j b^j_n B_{n-s_j}``.
    Type I (for ``n_k >= 1``): ``x A_n - A_{n-e_k} - b0_{n-e_k}(k) A_n
    - sum_j b^j_{n+s_{j-1}} A_{n+s_j}``, for every component ``i``.
    Residuals are measured against the largest coefficient of the terms.
    Type II instances where ``pi`` decrements a zero entry of ``n`` before a
    non-zero one are outside the relation's domain and are skipped (see
    :func:`combinatorics.boundary_admissible`).
    """
    p = params.p
    perms = permutations or canonical_permutations(p)
    t = Tracker("recurrence_residuals", describe_instance(params, nmax=nmax), resolve_tolerance(tolerance))
    for pi in perms:
        pi = cb.permutation(pi)
        for n in cb.multi_indices(p, nmax):
            for k in range(1, p + 1):
                ek = cb.unit(p, k)
                if cb.boundary_admissible(n, pi):
                    c = fm.nn_coefficients(params, n, k, pi)
                    bn = fm.type_ii_coefficients(params, n)
                    terms = [bn.shift(1), fm.type_ii_coefficients(params, cb.add(n, ek)), bn * c.b0]
                    for j in range(1, p + 1):
                        terms.append(_type_ii_or_zero(params, cb.sub(n, cb.s_vector(pi, j))) * c.bj[j - 1])
                    res = terms[0] - terms[1] - terms[2]
                    for extra in terms[3:]:
                        res = res - extra
                    t.residual(res, _scale(terms), f"II n={n} k={k} pi={pi}")

                if n[k - 1] == 0:
                    continue
                down = cb.sub(n, ek)
                b0 = fm.nn_coefficients(params, down, k, pi).b0
                ups = []
                for j in range(1, p + 1):
                    src = cb.add(n, cb.s_vector(pi, j - 1))
                    ups.append((fm.nn_coefficients(params, src, k, pi).bj[j - 1], cb.add(n, cb.s_vector(pi, j))))
                for i in range(1, p + 1):
                    an = fm.type_i_coefficients(params, n, i)
                    terms = [an.shift(1), fm.type_i_coefficients(params, down, i), an * b0]
                    terms += [fm.type_i_coefficients(params, m, i) * bj for bj, m in ups]
                    res = terms[0] - terms[1] - terms[2]
                    for extra in terms[3:]:
                        res = res - extra
                    t.residual(res, _scale(terms), f"I{i} n={n} k={k} pi={pi}")
    return t.report()


def check_nn_vs_oracle(params, nmax: int, permutations: Sequence | None = None, tolerance=None) -> CheckReport:
    """Closed-form recurrence coefficients against both oracle routes."""
    p = params.p
    perms = permutations or canonical_permutations(p)
    tol = resolve_tolerance(tolerance)
    t = Tracker("nn_vs_oracle", describe_instance(params, nmax=nmax), tol)
    ms = MomentSystem(params)
    for pi in perms:
        pi = cb.permutation(pi)
        for n in cb.multi_indices(p, nmax):
            for k in range(1, p + 1):
                got = fm.nn_coefficients(params, n, k, pi)
                # both routes are compared below, so a disagreement is a failed comparison
                ex = ms.extract_nn_coefficients(n, k, pi, tolerance=mpmath.inf)
                for j in range(p + 1):
                    if ex.determined[j]:
                        where = f"n={n} k={k} pi={pi} j={j}"
                        t.scalar(got.component(j), ex.coefficients.component(j), where)
                        t.scalar(got.component(j), ex.integral_route.component(j), where)
    return t.report()


def check_step_line(params, nmax: int, tolerance=None) -> CheckReport:
    """Step-line closed forms against the nearest-neighbour ones, plus the scalar recurrence."""
    p = params.p
    t = Tracker("step_line", describe_instance(params, nmax=nmax), resolve_tolerance(tolerance))
    for n in range(nmax + 1):
        m, k = divmod(n, p)
        nn = fm.nn_coefficients(
            params, cb.step_line_multiindex(n, p), k + 1, cb.step_line_permutation(k, p)
        )
        for j in range(p + 1):
            if n - j >= 0:
                t.scalar(fm.step_line_coefficients(params, n, j), nn.component(j), f"n={n} j={j}")

    def B(q):
        return fm.type_ii_coefficients(params, cb.step_line_multiindex(q, p)) if q >= 0 else Polynomial.zero()

    for n in range(nmax + 1):
        bn = B(n)
        terms = [bn.shift(1), B(n + 1)]
        terms += [B(n - j) * fm.step_line_coefficients(params, n, j) for j in range(p + 1)]
        res = terms[0] - terms[1]
        for extra in terms[2:]:
            res = res - extra
        t.residual(res, _scale(terms), f"scalar n={n}")
    return t.report()


# ------------------------------------------------------------ hypergeometric


def check_jp_lemma(params, max_entry: int, mmax: int, tolerance=None) -> CheckReport:
    """Brute-force type II weighted sum against its closed form, every ``n`` in a box."""
    t = Tracker("jp_lemma", describe_instance(params, max_entry=max_entry, mmax=mmax), resolve_tolerance(tolerance))
    for n in cb.box(params.p, max_entry):
        terms = list(type_ii_terms(params, n))
        for i in range(1, params.p + 1):
            for m in range(mmax + 1):
                t.scalar(
                    fm.jp_lemma_brute_force(params, n, i, m, terms),
                    fm.jp_lemma_closed_form(params, n, i, m),
                    f"n={n} i={i} m={m}",
                )
    return t.report()


def kf_connection_sides(n_i: int, n_hat: int, alpha0, c, c_hat, x) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Both sides of the two-variable Kampé de Fériet connection formula at ``x``."""
    c, c_hat, x, a0 = to_real(c), to_real(c_hat), to_real(x), to_real(alpha0)
    lhs = kampe_de_feriet(
        [1 - n_i], [alpha0 + n_hat + 1], [[], [n_hat]], [[], []], [c * x, c / (c - c_hat)]
    )
    pref = to_real(pochhammer(n_hat, n_i - 1)) / to_real(pochhammer(a0 + n_hat + 1, n_i - 1))
    pref *= (c_hat / (c_hat - c)) ** (n_i - 1)
    rhs = kampe_de_feriet(
        [1 - n_i, a0 + 1],
        [2 - n_i - n_hat],
        [[], []],
        [[a0 + 1], []],
        [(c - c_hat) * c * x / c_hat, -(c - c_hat) / c_hat],
    )
    return lhs, pref * rhs


def check_kf_connection(n_i: int, n_hat: int, alpha0, c, c_hat, xs: Sequence, tolerance=None) -> CheckReport:
    t = Tracker(
        "kf_connection",
        f"n_i={n_i} n_hat={n_hat} alpha0={alpha0} c={c} c_hat={c_hat}",
        resolve_tolerance(tolerance),
    )
    for x in xs:
        lhs, rhs = kf_connection_sides(n_i, n_hat, alpha0, c, c_hat, x)
        t.scalar(lhs, rhs, f"x={x}")
    return t.report()


def laguerre2_p2_type_i_kf(params: fm.LaguerreSecond, n, i: int, x) -> mpmath.mpf:
    """Two-weight type I value through the alternative Kampé de Fériet representation."""
    n1, n2 = n
    N = n1 + n2
    a0 = to_real(params.alpha0)
    c = to_real(params.cs[i - 1])
    ch = to_real(params.cs[2 - i])
    ni = n[i - 1]
    pref = mpmath.mpf(-1) ** (ni - 1) * mpmath.factorial(N - 2)
    pref /= mpmath.factorial(n1 - 1) * mpmath.factorial(n2 - 1) * mpmath.gamma(a0 + N)
    pref *= c ** (a0 + N) * (ch / (ch - c)) ** (N - 1)
    series = kampe_de_feriet(
        [1 - ni, a0 + 1], [2 - N], [[], []], [[a0 + 1], []], [(c - ch) * c * to_real(x) / ch, -(c - ch) / ch]
    )
    return pref * series


def check_laguerre2_p2_form(params: fm.LaguerreSecond, nmax: int, xs: Sequence, tolerance=None) -> CheckReport:
    """The general type I closed form against the two-weight representation (``n_1, n_2 >= 1``)."""
    if params.p != 2:
        raise InvalidParams("the two-weight representation needs p = 2")
    t = Tracker("laguerre2_p2_form", describe_instance(params, nmax=nmax), resolve_tolerance(tolerance))
    for n in cb.multi_indices(2, nmax, 2):
        if min(n) < 1:
            continue
        for i in (1, 2):
            a = fm.type_i_coefficients(params, n, i)
            for x in xs:
                t.scalar(a(x), laguerre2_p2_type_i_kf(params, n, i, x), f"n={n} i={i} x={x}")
    return t.report()


# ------------------------------------------------------------ random draws


def random_rational(rng: random.Random, low: Fraction, high: Fraction, max_den: int = 12) -> Fraction:
    den = rng.randint(1, max_den)
    lo = math.ceil(low * den)
    hi = math.floor(high * den)
    return Fraction(rng.randint(lo, hi), den)


def random_jp_params(rng: random.Random, p: int) -> fm.JacobiPineiro:
    """AT-valid Jacobi-Piñeiro parameters with small denominators."""
    while True:
        alphas = [random_rational(rng, Fraction(-9, 10), Fraction(3)) for _ in range(p)]
        beta = random_rational(rng, Fraction(-9, 10), Fraction(3))
        if any(a <= -1 for a in alphas) or beta <= -1:
            continue
        try:
            return fm.JacobiPineiro(tuple(alphas), beta)
        except InvalidParams:
            continue

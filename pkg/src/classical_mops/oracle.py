"""Moment-matrix ground truth, independent of every closed form.

Polynomials are obtained by solving the defining orthogonality conditions
as dense linear systems over the moments, and recurrence coefficients are
recovered from those polynomials in two independent ways.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from . import combinatorics as cb
from .arith import relative_error, to_real
from .errors import RouteMismatch, SingularSystem
from .families import NNCoefficients, moment
from .families.core import check_multi_index, check_permutation, check_weight_index
from .polynomial import Polynomial


def solve_full_pivot(matrix: list[list], rhs: list) -> list:
    """Gaussian elimination with complete pivoting at the working precision.

    A pivot below ``2**(-precision/2)`` times the largest initial entry
    raises :class:`SingularSystem`.
    """
    n = len(matrix)
    a = [[to_real(v) for v in row] + [to_real(r)] for row, r in zip(matrix, rhs)]
    if n == 0:
        return []
    scale = max(abs(a[r][c]) for r in range(n) for c in range(n))
    threshold = scale * mpmath.ldexp(mpmath.mpf(1), -(mpmath.mp.prec // 2))
    cols = list(range(n))
    for step in range(n):
        pr, pc, best = step, step, mpmath.mpf(-1)
        for r in range(step, n):
            for c in range(step, n):
                if abs(a[r][c]) > best:
                    pr, pc, best = r, c, abs(a[r][c])
        if best <= threshold or best == 0:
            raise SingularSystem(f"pivot {mpmath.nstr(best, 5)} at step {step} is below threshold")
        a[step], a[pr] = a[pr], a[step]
        if pc != step:
            for row in a:
                row[step], row[pc] = row[pc], row[step]
            cols[step], cols[pc] = cols[pc], cols[step]
        piv = a[step][step]
        for r in range(step + 1, n):
            f = a[r][step] / piv
            if f:
                for c in range(step, n + 1):
                    a[r][c] -= f * a[step][c]
    y = [mpmath.mpf(0)] * n
    for r in range(n - 1, -1, -1):
        s = a[r][n] - sum((a[r][c] * y[c] for c in range(r + 1, n)), mpmath.mpf(0))
        y[r] = s / a[r][r]
    x = [mpmath.mpf(0)] * n
    for pos, col in enumerate(cols):
        x[col] = y[pos]
    return x


@dataclass(frozen=True)
class ExtractedNN:
    """Recurrence coefficients from the oracle.

    ``determined[j]`` is False when component ``j`` multiplies a zero
    polynomial (a multi-index with a negative entry), so its value is
    reported as 0 and carries no information.
    """

    coefficients: NNCoefficients
    determined: tuple[bool, ...]
    integral_route: NNCoefficients


@dataclass
class MomentSystem:
    """Moments of one weight system, cached per instance.

    Not thread-safe: give each worker its own instance.
    """

    params: object
    _moments: dict = field(default_factory=dict, repr=False)
    _type_ii: dict = field(default_factory=dict, repr=False)
    _type_i: dict = field(default_factory=dict, repr=False)

    @property
    def p(self) -> int:
        return self.params.p

    def moment(self, i: int, k: int) -> mpmath.mpf:
        key = (i, k, mpmath.mp.prec)
        if key not in self._moments:
            self._moments[key] = moment(self.params, i, k)
        return self._moments[key]

    def integrate(self, poly: Polynomial, i: int, shift: int = 0) -> mpmath.mpf:
        """``integral of x**shift * poly(x) * w_i``."""
        return sum((c * self.moment(i, d + shift) for d, c in enumerate(poly.coeffs)), mpmath.mpf(0))

    def pair(self, b: Polynomial, a_list: list[Polynomial], shift: int = 0) -> mpmath.mpf:
        """``sum_i integral of x**shift * b * A^(i) * w_i``."""
        total = mpmath.mpf(0)
        for i, a in enumerate(a_list, start=1):
            if not a.is_zero and not b.is_zero:
                total += self.integrate(b * a, i, shift)
        return total

    def solve_type_ii(self, n) -> Polynomial:
        n = check_multi_index(self.params, n)
        key = (n, mpmath.mp.prec)
        if key not in self._type_ii:
            N = sum(n)
            rows, rhs = [], []
            for i in range(1, self.p + 1):
                for j in range(n[i - 1]):
                    rows.append([self.moment(i, j + d) for d in range(N)])
                    rhs.append(-self.moment(i, j + N))
            low = solve_full_pivot(rows, rhs)
            self._type_ii[key] = Polynomial(tuple(low) + (1,))
        return self._type_ii[key]

    def solve_type_i(self, n) -> list[Polynomial]:
        n = check_multi_index(self.params, n)
        N = sum(n)
        if N < 1:
            raise ValueError("type I polynomials need |n| >= 1")
        key = (n, mpmath.mp.prec)
        if key not in self._type_i:
            unknowns = [(i, d) for i in range(1, self.p + 1) for d in range(n[i - 1])]
            rows = [[self.moment(i, j + d) for i, d in unknowns] for j in range(N)]
            rhs = [0] * (N - 1) + [1]
            sol = solve_full_pivot(rows, rhs)
            polys = []
            for i in range(1, self.p + 1):
                polys.append(Polynomial(tuple(v for (q, _), v in zip(unknowns, sol) if q == i)))
            self._type_i[key] = polys
        return self._type_i[key]

    def type_ii_or_zero(self, n) -> Polynomial:
        return self.solve_type_ii(n) if cb.is_valid(n) else Polynomial.zero()

    def extract_nn_coefficients(self, n, k: int, pi, tolerance=None) -> ExtractedNN:
        """Recover ``b^0_n(k), b^1_n, ..., b^p_n`` and cross-check two derivations.

        The expansion route matches ``x B_n - B_{n+e_k}`` against the monic
        basis ``B_n, B_{n-s_1}, ..., B_{n-s_p}`` degree by degree.  The
        integral route pairs ``x B_n`` with ``Q_{n+e_k}`` for ``b^0`` and with
        ``Q_{n-s_{j-1}}`` for ``b^j``, where ``Q_m = sum_i A^(i)_m w_i``.
        """
        n = check_multi_index(self.params, n)
        check_weight_index(self.params, k)
        pi = check_permutation(self.params, pi)
        p, N = self.p, sum(n)
        bn = self.solve_type_ii(n)
        rest = bn.shift(1) - self.solve_type_ii(cb.add(n, cb.unit(p, k)))

        values, determined = [], []
        for j in range(p + 1):
            idx = cb.sub(n, cb.s_vector(pi, j))
            if not cb.is_valid(idx):
                values.append(mpmath.mpf(0))
                determined.append(False)
                continue
            basis = self.solve_type_ii(idx)
            coef = rest.coeff(N - j)
            rest = rest - basis * coef
            values.append(coef)
            determined.append(True)
        expansion = NNCoefficients(values[0], tuple(values[1:]))

        integral = [self.pair(bn, self.solve_type_i(cb.add(n, cb.unit(p, k))), shift=1)]
        for j in range(1, p + 1):
            if determined[j]:
                m = cb.sub(n, cb.s_vector(pi, j - 1))
                integral.append(self.pair(bn, self.solve_type_i(m), shift=1))
            else:
                integral.append(mpmath.mpf(0))
        integral_route = NNCoefficients(integral[0], tuple(integral[1:]))

        tol = tolerance if tolerance is not None else default_route_tolerance()
        for j in range(p + 1):
            if determined[j]:
                err = relative_error(values[j], integral[j])
                if err > tol:
                    raise RouteMismatch(
                        f"component {j} at n={n}, k={k}, pi={pi}: expansion "
                        f"{mpmath.nstr(values[j], 15)} vs integral {mpmath.nstr(integral[j], 15)}"
                    )
        return ExtractedNN(expansion, tuple(determined), integral_route)


def default_route_tolerance() -> mpmath.mpf:
    return mpmath.ldexp(mpmath.mpf(1), -(mpmath.mp.prec - 156))


def solve_type_ii(ms: MomentSystem, n) -> Polynomial:
    return ms.solve_type_ii(n)


def solve_type_i(ms: MomentSystem, n) -> list[Polynomial]:
    return ms.solve_type_i(n)


def extract_nn_coefficients(ms: MomentSystem, n, k: int, pi, tolerance=None) -> ExtractedNN:
    return ms.extract_nn_coefficients(n, k, pi, tolerance)

"""Finite sections of the banded Hessenberg operator of the step-line recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath

from . import combinatorics as cb
from . import families as fm
from .arith import to_decimal, to_real
from .polynomial import Polynomial
from .verify import CheckReport, Tracker, describe_instance, resolve_tolerance


@dataclass(frozen=True)
class BandedHessenberg:
    """``N x N`` leading section, stored one sequence per diagonal.

    ``diagonals[j][r - j]`` is ``b^j_r`` at row ``r``, column ``r - j``; the
    superdiagonal is identically 1 and not stored.
    """

    N: int
    p: int
    diagonals: tuple

    def entry(self, r: int, c: int) -> mpmath.mpf:
        if not (0 <= r < self.N and 0 <= c < self.N):
            raise IndexError(f"({r}, {c}) outside a {self.N}x{self.N} section")
        if c == r + 1:
            return mpmath.mpf(1)
        j = r - c
        if 0 <= j <= self.p:
            return self.diagonals[j][c]
        return mpmath.mpf(0)

    def dense(self) -> list[list[mpmath.mpf]]:
        return [[self.entry(r, c) for c in range(self.N)] for r in range(self.N)]

    def matrix(self) -> mpmath.matrix:
        return mpmath.matrix(self.dense())

    def bandwidth(self) -> int:
        """Number of diagonals holding a nonzero entry."""
        count = 1 if self.N > 1 else 0
        for d in self.diagonals:
            if any(v != 0 for v in d):
                count += 1
        return count

    def to_sparse(self, bits: int | None = None) -> dict:
        """Diagonal-major serialization with decimal strings."""
        return {
            "N": self.N,
            "p": self.p,
            "superdiagonal": "1",
            "diagonals": {str(j): [to_decimal(v, bits) for v in d] for j, d in enumerate(self.diagonals)},
        }

    def to_dense(self, bits: int | None = None) -> list[list[str]]:
        return [[to_decimal(v, bits) for v in row] for row in self.dense()]


def build(params, N: int) -> BandedHessenberg:
    if N < 1:
        raise ValueError("N must be positive")
    diagonals = []
    for j in range(params.p + 1):
        diagonals.append(tuple(fm.step_line_coefficients(params, r, j) for r in range(j, N)))
    return BandedHessenberg(N, params.p, tuple(diagonals))


def step_line_type_ii(params, n: int) -> Polynomial:
    return fm.type_ii_coefficients(params, cb.step_line_multiindex(n, params.p))


def step_line_type_i(params, n: int) -> list[Polynomial]:
    """``A^(i)_n`` along the step line for every ``i``; the zero tuple at ``n = 0``."""
    if n == 0:
        return [Polynomial.zero()] * params.p
    return fm.type_i_all(params, cb.step_line_multiindex(n, params.p))


def type_ii_rows(T: BandedHessenberg) -> range:
    """Rows of ``T B = x B`` whose references ``B_{r-p} .. B_{r+1}`` all lie in the section."""
    return range(0, T.N - 1)


def type_i_rows(T: BandedHessenberg) -> range:
    """Rows of ``T^t A = x A`` (``A = (A_1, .., A_N)``) whose references stay in the section."""
    return range(0, max(T.N - T.p, 0))


def default_sample_points(params) -> list:
    """Three points inside the support of the weights."""
    if isinstance(params, fm.JacobiPineiro):
        return ["1/10", "1/2", "9/10"]
    if isinstance(params, fm.HermiteMultiple):
        return [-2, 0, 3]
    return ["1/2", 2, 5]


def check_operator_identity(T: BandedHessenberg, params, xs: Sequence, tolerance=None) -> CheckReport:
    """``(T B(x))_r = x B_r(x)`` and ``(T^t A(x))_r = x A_{r+1}(x)`` on every complete row.

    Deviations are relative to the largest term in the row.
    """
    t = Tracker("hessenberg_identity", describe_instance(params, N=T.N), resolve_tolerance(tolerance))
    for x in xs:
        xr = to_real(x)
        b = [step_line_type_ii(params, n)(xr) for n in range(T.N)]
        for r in type_ii_rows(T):
            terms = [T.entry(r, c) * b[c] for c in range(max(0, r - T.p), r + 2)]
            _row(t, sum(terms, mpmath.mpf(0)), xr * b[r], terms, f"II x={x} row={r}")
        a = [step_line_type_i(params, n + 1) for n in range(T.N)]
        for i in range(params.p):
            vals = [a[n][i](xr) for n in range(T.N)]
            for r in type_i_rows(T):
                lo, hi = max(0, r - 1), min(T.N - 1, r + T.p)
                terms = [T.entry(q, r) * vals[q] for q in range(lo, hi + 1)]
                _row(t, sum(terms, mpmath.mpf(0)), xr * vals[r], terms, f"I{i + 1} x={x} row={r}")
    return t.report()


def _row(t: Tracker, got, want, terms, where: str) -> None:
    scale = max([abs(v) for v in terms] + [abs(want), mpmath.mpf(1)])
    dev = abs(got - want)
    t.record(dev, dev / scale, where)


def characteristic_polynomial_gap(params, N: int, xs: Sequence) -> mpmath.mpf:
    """Worst ``re(det(x I - T_N), B_N(x))`` over the sample points."""
    T = build(params, N).matrix()
    bn = step_line_type_ii(params, N)
    worst = mpmath.mpf(0)
    for x in xs:
        xr = to_real(x)
        det = mpmath.det(xr * mpmath.eye(N) - T)
        worst = max(worst, abs(det - bn(xr)) / max(mpmath.mpf(1), abs(det), abs(bn(xr))))
    return worst

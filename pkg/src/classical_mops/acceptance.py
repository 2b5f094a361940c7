"""The ten acceptance criteria as runnable functions.

Each criterion returns a :class:`CriterionResult`; :func:`run_all` runs them
in order.  All of them set their own working precision.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath

from . import families as fm
from . import hessenberg as hz
from . import limits as lim
from . import verify as vf
from .arith import (
    DEFAULT_PRECISION,
    gauss_2f1_rhs,
    pfaff_saalschutz_rhs,
    pfq_terminating,
    relative_error,
    working_precision,
)
from .errors import DenominatorPole, InvalidParams

F = Fraction


def canonical_instances() -> list:
    """The eight fixed parameter sets: every family at p = 2 and p = 3."""
    a2, a3 = (F(0), F(1, 2)), (F(0), F(1, 3), F(2, 3))
    return [
        fm.JacobiPineiro(a2, F(1, 4)),
        fm.JacobiPineiro(a3, F(1, 4)),
        fm.LaguerreFirst(a2),
        fm.LaguerreFirst(a3),
        fm.LaguerreSecond(F(1, 2), (F(1), F(2))),
        fm.LaguerreSecond(F(1, 2), (F(1), F(2), F(3))),
        fm.HermiteMultiple((F(-1), F(1))),
        fm.HermiteMultiple((F(-1), F(0), F(1))),
    ]


@dataclass(frozen=True)
class AcceptanceConfig:
    precision: int = DEFAULT_PRECISION
    tolerance: str = "1e-30"
    poly_max_order: int = 5
    biorthogonality_max_order: int = 4
    seed: int = 20260101
    lemma_draws: int = 25
    lemma_max_entry: int = 3
    lemma_mmax: int = 3
    lemma_tolerance: str = "1e-35"
    kf_draws: int = 10
    kf_points: tuple = (F(1, 3), F(2), F(10))
    kf_orders: tuple = (1, 2, 3, 4)
    hessenberg_size: int = 12
    hessenberg_tolerance: str = "1e-28"
    special_draws: int = 20
    special_max_n: int = 8
    special_tolerance: str = "1e-40"
    limit_precision: int = lim.LIMIT_PRECISION


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    worst: mpmath.mpf
    tolerance: str
    detail: str
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        worst = mpmath.nstr(self.worst, 3)
        return f"[{status}] {self.number:2d} {self.name}: worst={worst} tol={self.tolerance} ({self.seconds:.1f}s) {self.detail}"


def _from_reports(number: int, name: str, reports: list, tolerance: str, detail: str) -> CriterionResult:
    failures = [f"{r.name} {r.instance}: {mpmath.nstr(r.max_rel, 3)} at {r.worst}" for r in reports if not r.passed]
    worst = max((r.max_rel for r in reports), default=mpmath.mpf(0))
    return CriterionResult(number, name, not failures and bool(reports), worst, tolerance, detail, failures=failures)


def criterion_polynomials(cfg: AcceptanceConfig) -> CriterionResult:
    reports = [vf.check_polynomials_vs_oracle(p, cfg.poly_max_order, cfg.tolerance) for p in canonical_instances()]
    return _from_reports(1, "closed forms vs oracle (polynomials)", reports, cfg.tolerance, f"|n|<={cfg.poly_max_order}")


def criterion_recurrence_oracle(cfg: AcceptanceConfig) -> CriterionResult:
    reports = [
        vf.check_nn_vs_oracle(p, cfg.poly_max_order, vf.canonical_permutations(p.p, cfg.seed), cfg.tolerance)
        for p in canonical_instances()
    ]
    return _from_reports(2, "closed forms vs oracle (recurrence)", reports, cfg.tolerance, "both routes")


def criterion_residuals(cfg: AcceptanceConfig) -> CriterionResult:
    reports = [
        vf.check_recurrence_residuals(p, cfg.poly_max_order, vf.canonical_permutations(p.p, cfg.seed), cfg.tolerance)
        for p in canonical_instances()
    ]
    return _from_reports(3, "recurrence residuals", reports, cfg.tolerance, "type I and II")


def criterion_biorthogonality(cfg: AcceptanceConfig) -> CriterionResult:
    reports = [vf.check_biorthogonality(p, cfg.biorthogonality_max_order, cfg.tolerance) for p in canonical_instances()]
    return _from_reports(4, "biorthogonality", reports, cfg.tolerance, f"|n|,|m|<={cfg.biorthogonality_max_order}")


def criterion_step_line(cfg: AcceptanceConfig) -> CriterionResult:
    reports = [vf.check_step_line(p, 4 * p.p - 1, cfg.tolerance) for p in canonical_instances()]
    return _from_reports(5, "step-line consistency", reports, cfg.tolerance, "n<=4p-1")


def criterion_jp_lemma(cfg: AcceptanceConfig) -> CriterionResult:
    rng = random.Random(cfg.seed)
    reports = []
    for draw in range(cfg.lemma_draws):
        params = vf.random_jp_params(rng, 2 + draw % 3)
        reports.append(vf.check_jp_lemma(params, cfg.lemma_max_entry, cfg.lemma_mmax, cfg.lemma_tolerance))
    return _from_reports(6, "Jacobi-Pineiro weighted-sum lemma", reports, cfg.lemma_tolerance, f"{cfg.lemma_draws} draws, p=2..4")


def random_kf_draw(rng: random.Random) -> tuple:
    """``(alpha0, c, c_hat)`` with ``alpha0 > -1`` and distinct positive ``c, c_hat``."""
    while True:
        alpha0 = vf.random_rational(rng, F(-9, 10), F(3))
        c = vf.random_rational(rng, F(1, 12), F(4))
        c_hat = vf.random_rational(rng, F(1, 12), F(4))
        if alpha0 > -1 and c > 0 and c_hat > 0 and c != c_hat:
            return alpha0, c, c_hat


def criterion_kf_connection(cfg: AcceptanceConfig) -> CriterionResult:
    rng = random.Random(cfg.seed)
    reports = []
    for _ in range(cfg.kf_draws):
        alpha0, c, c_hat = random_kf_draw(rng)
        for n_i in cfg.kf_orders:
            for n_hat in cfg.kf_orders:
                reports.append(vf.check_kf_connection(n_i, n_hat, alpha0, c, c_hat, cfg.kf_points, cfg.tolerance))
    return _from_reports(7, "Kampe de Feriet connection", reports, cfg.tolerance, f"{cfg.kf_draws} draws")


def criterion_limits(cfg: AcceptanceConfig) -> CriterionResult:
    with working_precision(max(cfg.limit_precision, lim.LIMIT_PRECISION)):
        reports = [lim.check_limits(name, precision=cfg.limit_precision) for name in lim.POLYNOMIAL_RELATIONS]
    failures = [f"{r.name}: ratio {mpmath.nstr(r.max_rel, 3)} ({r.worst})" for r in reports if not r.passed]
    worst = max(r.max_rel / r.tolerance for r in reports)
    return CriterionResult(
        8, "limit relations (ratio / bound)", not failures, worst, "1", f"{len(reports)} relations", failures=failures
    )


def criterion_hessenberg(cfg: AcceptanceConfig) -> CriterionResult:
    reports = []
    for params in canonical_instances():
        T = hz.build(params, cfg.hessenberg_size)
        reports.append(hz.check_operator_identity(T, params, hz.default_sample_points(params), cfg.hessenberg_tolerance))
    return _from_reports(9, "Hessenberg operator identity", reports, cfg.hessenberg_tolerance, f"N={cfg.hessenberg_size}")


def random_special_draw(rng: random.Random, kind: str, max_n: int) -> tuple:
    """Parameters for which neither side has a pole."""
    while True:
        n = rng.randint(0, max_n)
        a, b, c = (vf.random_rational(rng, F(-5), F(5)) for _ in range(3))
        try:
            if kind == "gauss":
                return (n, b, c), pfq_terminating([-n, b], [c], 1), gauss_2f1_rhs(n, b, c)
            return (n, a, b, c), pfq_terminating([-n, a, b], [c, 1 + a + b - c - n], 1), pfaff_saalschutz_rhs(n, a, b, c)
        except DenominatorPole:
            continue


def criterion_special_functions(cfg: AcceptanceConfig) -> CriterionResult:
    rng = random.Random(cfg.seed)
    tol = mpmath.mpf(cfg.special_tolerance)
    worst, failures = mpmath.mpf(0), []
    for kind in ("gauss", "saalschutz"):
        for _ in range(cfg.special_draws):
            args, lhs, rhs = random_special_draw(rng, kind, cfg.special_max_n)
            err = relative_error(lhs, rhs)
            worst = max(worst, err)
            if err > tol:
                failures.append(f"{kind}{args}: {mpmath.nstr(err, 3)}")
    return CriterionResult(
        10, "Gauss and Pfaff-Saalschutz sums", not failures, worst, cfg.special_tolerance, f"{cfg.special_draws} draws each", failures=failures
    )


CRITERIA: tuple[Callable[[AcceptanceConfig], CriterionResult], ...] = (
    criterion_polynomials,
    criterion_recurrence_oracle,
    criterion_residuals,
    criterion_biorthogonality,
    criterion_step_line,
    criterion_jp_lemma,
    criterion_kf_connection,
    criterion_limits,
    criterion_hessenberg,
    criterion_special_functions,
)


def run_criterion(number: int, cfg: AcceptanceConfig | None = None) -> CriterionResult:
    cfg = cfg or AcceptanceConfig()
    start = time.perf_counter()
    with working_precision(cfg.precision):
        try:
            result = CRITERIA[number - 1](cfg)
        except (InvalidParams, ArithmeticError) as exc:
            result = CriterionResult(number, CRITERIA[number - 1].__name__, False, mpmath.inf, "-", f"{type(exc).__name__}: {exc}")
    result.seconds = time.perf_counter() - start
    return result


def run_all(cfg: AcceptanceConfig | None = None) -> list[CriterionResult]:
    return [run_criterion(k, cfg) for k in range(1, len(CRITERIA) + 1)]

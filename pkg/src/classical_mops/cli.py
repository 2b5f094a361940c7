"""Command-line front end.

Output goes to stdout (or ``--output``) only after the whole computation
succeeded; failures are reported as one JSON object on stderr.

Exit codes: 0 success, 1 a verification check failed, 2 invalid
configuration, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import mpmath

from . import combinatorics as cb
from . import families as fm
from . import hessenberg as hz
from . import limits as lim
from . import verify as vf
from .arith import DEFAULT_PRECISION, MIN_PRECISION, parse_rational, to_decimal, working_precision
from .errors import InvalidParams, MOPError, NumericError

COMMANDS = ("coeffs", "recurrence", "stepline", "hessenberg", "verify", "limits")
EXIT_OK, EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3
_LIST_FLAGS = ("--alpha", "--c", "--n", "--perm")


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    alpha: list = field(default_factory=list)
    beta: str | None = None
    alpha0: str | None = None
    c: list = field(default_factory=list)
    n: list | None = None
    k: int | None = None
    perm: list | None = None
    kind: str = "ii"
    weight: int | None = None
    max_order: int | None = None
    size: int | None = None
    layout: str = "sparse"
    relation: str | None = None
    precision: int = DEFAULT_PRECISION
    tolerance: str | None = None
    format: str = "json"
    output: str | None = None
    seed: int = 0
    workers: int | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidParams(f"unknown command {self.command!r}")
        if self.precision < MIN_PRECISION:
            raise InvalidParams(f"precision must be >= {MIN_PRECISION} bits")
        if self.format not in ("json", "csv"):
            raise InvalidParams(f"unknown format {self.format!r}")


def _split(text: str | None) -> list[str]:
    if text is None:
        return []
    return [t.strip() for t in text.split(",") if t.strip()]


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--c -1,1`` into ``--c=-1,1`` so argparse does not read ``-1,1`` as a flag."""
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _LIST_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classical-mops", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--family", choices=sorted(fm.FAMILY_NAMES))
    parser.add_argument("--alpha", help="comma-separated alpha_i (jp, laguerre1)")
    parser.add_argument("--beta", help="beta (jp)")
    parser.add_argument("--alpha0", help="alpha_0 (laguerre2)")
    parser.add_argument("--c", help="comma-separated c_i (laguerre2, hermite)")
    parser.add_argument("--n", help="multi-index, comma-separated")
    parser.add_argument("--k", type=int, help="direction index 1..p")
    parser.add_argument("--perm", help="permutation images, comma-separated (default identity)")
    parser.add_argument("--kind", choices=("i", "ii"), default="ii")
    parser.add_argument("--weight", type=int, help="type I component i (default all)")
    parser.add_argument("--max-order", type=int, dest="max_order")
    parser.add_argument("--size", type=int, help="Hessenberg section size N")
    parser.add_argument("--layout", choices=("dense", "sparse"), default="sparse")
    parser.add_argument("--relation", choices=sorted(lim.RELATIONS))
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    parser.add_argument("--tolerance")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--output")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int)
    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(_join_negative_values(argv))
    return RunConfig(
        command=ns.command,
        family=ns.family,
        alpha=_split(ns.alpha),
        beta=ns.beta,
        alpha0=ns.alpha0,
        c=_split(ns.c),
        n=[int(v) for v in _split(ns.n)] if ns.n is not None else None,
        k=ns.k,
        perm=[int(v) for v in _split(ns.perm)] if ns.perm is not None else None,
        kind=ns.kind,
        weight=ns.weight,
        max_order=ns.max_order,
        size=ns.size,
        layout=ns.layout,
        relation=ns.relation,
        precision=ns.precision,
        tolerance=ns.tolerance,
        format=ns.format,
        output=ns.output,
        seed=ns.seed,
        workers=ns.workers,
    )


def build_params(cfg: RunConfig):
    if cfg.family is None:
        raise InvalidParams("--family is required")
    try:
        if cfg.family == "jp":
            if not cfg.alpha or cfg.beta is None:
                raise InvalidParams("jp needs --alpha and --beta")
            return fm.JacobiPineiro(tuple(map(parse_rational, cfg.alpha)), parse_rational(cfg.beta))
        if cfg.family == "laguerre1":
            if not cfg.alpha:
                raise InvalidParams("laguerre1 needs --alpha")
            return fm.LaguerreFirst(tuple(map(parse_rational, cfg.alpha)))
        if cfg.family == "laguerre2":
            if not cfg.c or cfg.alpha0 is None:
                raise InvalidParams("laguerre2 needs --alpha0 and --c")
            return fm.LaguerreSecond(parse_rational(cfg.alpha0), tuple(map(parse_rational, cfg.c)))
        if not cfg.c:
            raise InvalidParams("hermite needs --c")
        return fm.HermiteMultiple(tuple(map(parse_rational, cfg.c)))
    except ValueError as exc:
        if isinstance(exc, InvalidParams):
            raise
        raise InvalidParams(str(exc)) from exc


def _need(value, flag: str):
    if value is None:
        raise InvalidParams(f"{flag} is required for this command")
    return value


def _dec(v) -> str:
    return to_decimal(v)


# ------------------------------------------------------------------ commands


def _coeffs(cfg: RunConfig, params):
    if cfg.n is not None:
        indices = [cb.multi_index(cfg.n)]
        if len(indices[0]) != params.p:
            raise InvalidParams(f"--n needs {params.p} entries")
    else:
        low = 1 if cfg.kind == "i" else 0
        indices = list(cb.multi_indices(params.p, _need(cfg.max_order, "--n or --max-order"), low))
    rows = []
    for n in indices:
        if cfg.kind == "ii":
            rows.append({"n": list(n), "coefficients": [_dec(c) for c in fm.type_ii_coefficients(params, n).coeffs]})
            continue
        weights = [cfg.weight] if cfg.weight else range(1, params.p + 1)
        for i in weights:
            poly = fm.type_i_coefficients(params, n, i)
            rows.append({"n": list(n), "i": i, "coefficients": [_dec(c) for c in poly.coeffs or [0]]})
    if cfg.n is not None and cfg.kind == "ii":
        return rows[0]["coefficients"], rows
    return rows, rows


def _recurrence(cfg: RunConfig, params):
    n = cb.multi_index(_need(cfg.n, "--n"))
    k = _need(cfg.k, "--k")
    pi = cb.permutation(cfg.perm) if cfg.perm else cb.identity(params.p)
    c = fm.nn_coefficients(params, n, k, pi)
    result = {"n": list(n), "k": k, "perm": list(pi), "b0": _dec(c.b0), "b": [_dec(v) for v in c.bj]}
    return result, [result]


def _stepline(cfg: RunConfig, params):
    top = _need(cfg.max_order, "--max-order")
    rows = []
    for n in range(top + 1):
        rows.append({"n": n, "b": [_dec(fm.step_line_coefficients(params, n, j)) for j in range(params.p + 1)]})
    return rows, rows


def _hessenberg(cfg: RunConfig, params):
    T = hz.build(params, _need(cfg.size, "--size"))
    if cfg.layout == "dense":
        dense = T.to_dense()
        return {"layout": "dense", "N": T.N, "matrix": dense}, [{"row": r, "values": row} for r, row in enumerate(dense)]
    sparse = T.to_sparse()
    rows = [{"diagonal": j, "values": vals} for j, vals in sparse["diagonals"].items()]
    return {"layout": "sparse", **sparse}, rows


def suite_jobs(params, nmax: int, tolerance, seed: int) -> list[tuple]:
    """Independent verification jobs for one parameter set."""
    perms = vf.canonical_permutations(params.p, seed)
    size = max(4 * params.p, 2 * params.p + 2)
    jobs = [
        ("check_polynomials_vs_oracle", (params, nmax), {"tolerance": tolerance}),
        ("check_orthogonality", (params, nmax), {"tolerance": tolerance}),
        ("check_biorthogonality", (params, nmax), {"tolerance": tolerance}),
        ("check_recurrence_residuals", (params, nmax, perms), {"tolerance": tolerance}),
        ("check_nn_vs_oracle", (params, nmax, perms), {"tolerance": tolerance}),
        ("check_step_line", (params, 4 * params.p - 1), {"tolerance": tolerance}),
        ("hessenberg_identity", (params, size), {"tolerance": tolerance}),
    ]
    if isinstance(params, fm.JacobiPineiro):
        jobs.append(("check_jp_lemma", (params, min(nmax, 3), 3), {"tolerance": tolerance}))
    if isinstance(params, fm.LaguerreSecond) and params.p == 2:
        jobs.append(("check_laguerre2_p2_form", (params, nmax, ["1/3", 2, 10]), {"tolerance": tolerance}))
    return jobs


def _hessenberg_job(params, size, tolerance=None):
    T = hz.build(params, size)
    return hz.check_operator_identity(T, params, hz.default_sample_points(params), tolerance)


def run_job(job: tuple, precision: int):
    """Execute one verification job at ``precision`` (safe in a worker process)."""
    name, args, kwargs = job
    with working_precision(precision):
        kwargs = dict(kwargs)
        if kwargs.get("tolerance") is not None:
            kwargs["tolerance"] = mpmath.mpf(kwargs["tolerance"])
        func = _hessenberg_job if name == "hessenberg_identity" else getattr(vf, name)
        return func(*args, **kwargs).to_dict(precision)


def _run_jobs(jobs: list[tuple], precision: int, workers: int | None) -> list[dict]:
    workers = workers if workers is not None else (os.cpu_count() or 1)
    if workers <= 1 or len(jobs) <= 1:
        return [run_job(job, precision) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(run_job, jobs, [precision] * len(jobs)))


def _verify(cfg: RunConfig, params):
    nmax = cfg.max_order if cfg.max_order is not None else 4
    reports = _run_jobs(suite_jobs(params, nmax, cfg.tolerance, cfg.seed), cfg.precision, cfg.workers)
    return reports, reports


def _limits(cfg: RunConfig, _params):
    names = [cfg.relation] if cfg.relation else list(lim.RELATIONS)
    bits = max(cfg.precision, lim.LIMIT_PRECISION)
    reports = []
    for name in names:
        with working_precision(bits):
            reports.append(lim.check_limits(name, precision=bits).to_dict(bits))
    return reports, reports


_HANDLERS = {
    "coeffs": _coeffs,
    "recurrence": _recurrence,
    "stepline": _stepline,
    "hessenberg": _hessenberg,
    "verify": _verify,
    "limits": _limits,
}


# ------------------------------------------------------------------ output


def _csv_cell(v) -> str:
    return ";".join(str(x) for x in v) if isinstance(v, list) else str(v)


def render(cfg: RunConfig, params_record: dict, precision: int, results, rows: list[dict]) -> str:
    if cfg.format == "json":
        doc = {"command": cfg.command, "params": params_record, "precision": precision, "results": results}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    buf.write(f"# command: {cfg.command}\n")
    for key, value in params_record.items():
        buf.write(f"# {key}: {_csv_cell(value)}\n")
    buf.write(f"# precision: {precision}\n")
    if not rows:
        return buf.getvalue()
    header = [k for k in rows[0] if k not in ("coefficients", "values", "b")]
    vector_key = next((k for k in ("coefficients", "values", "b") if k in rows[0]), None)
    width = max((len(r.get(vector_key, [])) for r in rows), default=0) if vector_key else 0
    prefix = {"coefficients": "c", "values": "v", "b": "b"}.get(vector_key, "v")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header + [f"{prefix}{d}" for d in range(width)])
    for r in rows:
        vec = list(r.get(vector_key, [])) if vector_key else []
        writer.writerow([_csv_cell(r[k]) for k in header] + vec + [""] * (width - len(vec)))
    return buf.getvalue()


def _fail(code: int, exc: BaseException) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit": code}) + "\n")
    return code


def run(cfg: RunConfig) -> int:
    try:
        params = build_params(cfg) if cfg.command != "limits" else None
        bits = cfg.precision if cfg.command != "limits" else max(cfg.precision, lim.LIMIT_PRECISION)
        with working_precision(bits):
            results, rows = _HANDLERS[cfg.command](cfg, params)
            record = fm.describe(params) if params is not None else {"relations": cfg.relation or "all"}
            text = render(cfg, record, bits, results, rows)
    except (InvalidParams, IndexError, ValueError) as exc:
        if isinstance(exc, NumericError):
            return _fail(EXIT_NUMERIC, exc)
        return _fail(EXIT_INVALID, exc)
    except (NumericError, ZeroDivisionError) as exc:
        return _fail(EXIT_NUMERIC, exc)
    except MOPError as exc:
        return _fail(EXIT_INVALID, exc)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.command in ("verify", "limits") and not all(r["passed"] for r in results):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except (InvalidParams, ValueError) as exc:
        return _fail(EXIT_INVALID, exc)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver: chart sweeps, exception catalogs, numeric audits.

Exit codes: 0 success, 2 usage error, 3 machine-checked proposition
violation (the violating classes are reported), 4 numeric-oracle failure.
Reports are deterministic; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import criterion, enumeration, oracle
from .enumeration import CONSTRAINT_MODES, EnumerationConfig
from .report import (
    RENDERERS,
    Report,
    chart_verdict_row,
    interior_verdict_row,
    sweep_rows,
    sym2_minima_row,
    torus_rows,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_ORACLE = 4

JOBS_ENV_VAR = "REIDTAI_JOBS"


def _default_jobs() -> int:
    value = os.environ.get(JOBS_ENV_VAR)
    if value is None:
        return 1
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reidtai",
        description="Exact age sweeps over boundary-chart spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--order-divides", type=int, default=12, metavar="N",
        help="restrict element orders to divisors of N (default 12)",
    )
    common.add_argument(
        "--mode", choices=CONSTRAINT_MODES, default="integral-both",
        help="which integrality filters to apply (default integral-both)",
    )
    common.add_argument(
        "--threshold", choices=("canonical", "terminal"), default="canonical",
        help="report ages < 1, or also the exact-1 boundary rows",
    )
    common.add_argument("--out", metavar="PATH", help="also write the report here")
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default="text",
    )
    common.add_argument(
        "--jobs", type=int, default=None, metavar="K",
        help=f"worker processes (default ${JOBS_ENV_VAR} or 1)",
    )

    p_sweep = sub.add_parser(
        "sweep", parents=[common],
        help="sweep one chart (--h/--r), one Sym^2 table (--h), or the interior (--interior --g)",
    )
    p_sweep.add_argument("--h", type=int, help="abelian-factor dimension")
    p_sweep.add_argument("--r", type=int, help="lattice rank")
    p_sweep.add_argument("--g", type=int, help="genus (with --interior)")
    p_sweep.add_argument(
        "--interior", action="store_true",
        help="classify the moduli interior at genus --g",
    )

    p_exc = sub.add_parser(
        "exceptions", parents=[common],
        help="catalog every below-1 class over all charts with h + r = g",
    )
    p_exc.add_argument("--g", type=int, required=True, help="total genus")

    p_orc = sub.add_parser(
        "oracle", help="numeric eigenvalue audit of the exact calculus",
    )
    p_orc.add_argument("--samples", type=int, default=100)
    p_orc.add_argument("--seed", type=int, default=0)
    p_orc.add_argument("--max-degree", type=int, default=8)
    p_orc.add_argument("--order-divides", type=int, default=36, metavar="N")
    p_orc.add_argument("--tol", type=float, default=oracle.DEFAULT_TOLERANCE)
    p_orc.add_argument("--out", metavar="PATH")
    p_orc.add_argument("--format", choices=("json", "csv", "text"), default="text")
    return parser


def _sweep_worker(task: tuple) -> criterion.SweepResult:
    chunk, cfg, include_age_one = task
    classes = enumeration.element_classes_for(chunk, cfg)
    return criterion.sweep_over(cfg.h, cfg.r, classes, include_age_one)


def run_chart_sweep(
    h: int,
    r: int,
    order_divides: int,
    mode: str,
    include_age_one: bool,
    jobs: int = 1,
) -> criterion.SweepResult:
    """One (h, r) sweep, optionally partitioned over worker processes.

    The partition fans the abelian-factor stream across workers; the merge
    is associative, so the result is independent of completion order.
    """
    cfg = EnumerationConfig(h, r, order_divides, mode)
    if jobs <= 1:
        return criterion.finalize_sweep(
            criterion.sweep_over(
                h, r, enumeration.element_classes(cfg), include_age_one
            )
        )
    w_classes = list(enumeration.abelian_factor_classes(cfg))
    tasks = [
        (w_classes[i::jobs], cfg, include_age_one)
        for i in range(jobs)
        if w_classes[i::jobs]
    ]
    if not tasks:
        return criterion.sweep_over(h, r, (), include_age_one)
    with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
        parts = list(pool.map(_sweep_worker, tasks))
    result = parts[0]
    for part in parts[1:]:
        result = criterion.merge_sweeps(result, part)
    return criterion.finalize_sweep(result)


def _echo_config(args: argparse.Namespace, command: str) -> dict:
    config = {
        "command": command,
        "order_divides": args.order_divides,
        "mode": args.mode,
        "threshold": args.threshold,
    }
    for key in ("h", "r", "g"):
        config[key] = getattr(args, key, None)
    config["interior"] = bool(getattr(args, "interior", False))
    return config


def _cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[Report, int]:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        parser.error("--jobs must be >= 1")
    include_age_one = args.threshold == "terminal"
    report = Report(config=_echo_config(args, "sweep"))

    if args.interior:
        if args.g is None:
            parser.error("--interior requires --g")
        if args.h is not None or args.r is not None:
            parser.error("--interior takes --g, not --h/--r")
        if args.g < 1:
            parser.error("--g must be >= 1")
        summary = criterion.interior_verdict(args.g, args.order_divides)
        report.verdicts.append(interior_verdict_row(summary))
        report.minima.append(
            sym2_minima_row(summary.g, summary.min_age, summary.witnesses)
        )
        return report, EXIT_OK

    if args.h is None:
        parser.error("sweep needs --h (with optional --r) or --interior --g")
    if args.g is not None:
        parser.error("--g is only used with --interior or the exceptions command")
    if args.h < 0 or (args.r is not None and args.r < 0):
        parser.error("--h and --r must be non-negative")

    if args.r is None:
        if args.h < 1:
            parser.error("the Sym^2 sweep needs --h >= 1")
        min_age, witnesses = criterion.sweep_sym2(args.h, args.order_divides)
        report.minima.append(sym2_minima_row(args.h, min_age, witnesses))
        return report, EXIT_OK

    if args.h == 0:
        summary = criterion.torus_summary(args.r, args.order_divides, args.mode)
        verdict, minima = torus_rows(summary)
        report.verdicts.append(verdict)
        report.minima.append(minima)
        return report, EXIT_OK

    result = run_chart_sweep(
        args.h, args.r, args.order_divides, args.mode, include_age_one, jobs
    )
    minima, exceptions, violations = sweep_rows(result)
    report.minima.append(minima)
    report.exceptions.extend(exceptions)
    report.violations.extend(violations)
    report.verdicts.append(chart_verdict_row(result))
    return report, EXIT_VIOLATION if violations else EXIT_OK


def _cmd_exceptions(
    args: argparse.Namespace, parser: argparse.ArgumentParser
) -> tuple[Report, int]:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.g < 1:
        parser.error("--g must be >= 1")
    include_age_one = args.threshold == "terminal"
    report = Report(config=_echo_config(args, "exceptions"))
    for h in range(1, args.g + 1):
        result = run_chart_sweep(
            h, args.g - h, args.order_divides, args.mode, include_age_one, jobs
        )
        result = criterion.check_exception_catalog(result)
        minima, exceptions, violations = sweep_rows(result)
        report.minima.append(minima)
        report.exceptions.extend(exceptions)
        report.violations.extend(violations)
        report.verdicts.append(chart_verdict_row(result))
    return report, EXIT_VIOLATION if report.violations else EXIT_OK


def _cmd_oracle(
    args: argparse.Namespace, parser: argparse.ArgumentParser
) -> tuple[Report, int]:
    if args.samples < 0:
        parser.error("--samples must be >= 0")
    config = {
        "command": "oracle",
        "samples": args.samples,
        "seed": args.seed,
        "max_degree": args.max_degree,
        "order_divides": args.order_divides,
        "tol": args.tol,
    }
    report = Report(config=config)
    try:
        cases = oracle.run_oracle_cases(
            args.samples, args.seed, args.max_degree, args.order_divides, args.tol
        )
    except oracle.OracleFailure as exc:
        report.oracle = {"cases": [], "passes": 0, "failures": 1, "error": str(exc)}
        print(f"oracle failure: {exc}", file=sys.stderr)
        return report, EXIT_ORACLE
    passes = sum(1 for c in cases if c["ok"])
    failures = len(cases) - passes
    report.oracle = {"cases": cases, "passes": passes, "failures": failures}
    return report, EXIT_ORACLE if failures else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    if args.command == "sweep":
        report, code = _cmd_sweep(args, parser)
    elif args.command == "exceptions":
        report, code = _cmd_exceptions(args, parser)
    else:
        report, code = _cmd_oracle(args, parser)
    rendered = RENDERERS[args.format](report)
    sys.stdout.write(rendered)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    if code == EXIT_VIOLATION:
        for row in report.violations:
            print(
                f"proposition violation [{row['rule']}]: h={row['h']} r={row['r']}"
                f" w={row['w_spec']} lambda={row['lambda_spec']}"
                f" age_v={row['age_v']} order-on-chart={row['v_order']}",
                file=sys.stderr,
            )
    print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Command-line interface: ``drawersched <command> [options]``.

Exit codes: 0 success, 1 violations found (``validate``), 2 usage error,
3 data error. Results go to stdout or ``-o`` files; logs go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Final

from .analysis.benchmark import benchmark_report, export_benchmark
from .analysis.bounds import auf
from .analysis.feasibility import check_feasibility
from .analysis.gantt import render_gantt
from .analysis.oracle import DEFAULT_BUDGET, brute_force_optimal
from .exceptions import DrawerSchedError, ParseError
from .formats.best_known import load_best_known
from .formats.descriptor import load_portfolio
from .formats.drawer_file import load_drawer_config
from .formats.schedule_io import export_schedule, import_schedule
from .formats.text_file import read_text_file
from .models.drawers import PRESETS, DrawerConfig, drawer_config_preset
from .models.enums import AufHorizon, ExportFormat
from .models.portfolio import Portfolio
from .models.schedule import Schedule
from .models.validation import validate_portfolio
from .scheduling.psgs import run_psgs
from .scheduling.rng import derive_seed
from .simulation import ProgressCallback, RunConfig, SimulationResult, simulate

_LOGGER = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_VIOLATIONS: Final = 1
EXIT_USAGE: Final = 2
EXIT_DATA: Final = 3

WORKERS_ENV: Final = "DRAWERSCHED_WORKERS"
DEFAULT_RUNS: Final = 100


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        _LOGGER.warning("Ignoring %s=%r (expected a positive integer)", WORKERS_ENV, raw)
        return 1
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drawersched",
        description="Drawer-based parallel schedule generation for multi-project portfolios",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def instance_args(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("instance", type=Path, help="Portfolio descriptor or single .sm file")
        sub.add_argument("--pool-sum", action="store_true", help="Pool global capacities by summing them")

    def run_args(sub: argparse.ArgumentParser, runs: bool) -> None:
        sub.add_argument("--seed", type=_non_negative, default=0, help="Master seed (default 0)")
        sub.add_argument(
            "--drawers",
            default="four-drawer",
            help=f"Drawer preset ({', '.join(PRESETS)}) or drawer file path (default four-drawer)",
        )
        sub.add_argument("--no-fast-forward", action="store_true", help="Step time one period at a time")
        if runs:
            sub.add_argument("--runs", type=_positive, default=DEFAULT_RUNS, help="Replications (default 100)")
            sub.add_argument(
                "--workers",
                type=_positive,
                default=_default_workers(),
                help=f"Worker processes (default ${WORKERS_ENV} or 1)",
            )

    def output_args(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("-o", "--output", type=Path, help="Output file")
        sub.add_argument("--format", type=ExportFormat, choices=list(ExportFormat), default=ExportFormat.CSV)

    solve = commands.add_parser("solve", help="One P-SGS run; prints TMS, writes the schedule")
    instance_args(solve)
    run_args(solve, runs=False)
    output_args(solve)
    solve.add_argument("--gantt", type=Path, help="Write a Gantt chart PNG")

    sim = commands.add_parser("simulate", help="Best of N seeded runs")
    instance_args(sim)
    run_args(sim, runs=True)
    output_args(sim)
    sim.add_argument("--samples", type=Path, help="Write run,tms,running_best CSV")
    sim.add_argument("--gantt", type=Path, help="Write a Gantt chart PNG of the best schedule")

    val = commands.add_parser("validate", help="Check a portfolio, or a schedule against it")
    instance_args(val)
    val.add_argument("schedule", type=Path, nargs="?", help="Schedule file to check")
    val.add_argument("--format", type=ExportFormat, choices=list(ExportFormat), default=ExportFormat.CSV)

    auf_cmd = commands.add_parser("auf", help="Average utilization factor per resource")
    instance_args(auf_cmd)
    auf_cmd.add_argument("--horizon", type=AufHorizon, choices=list(AufHorizon), default=AufHorizon.PORTFOLIO)

    bench = commands.add_parser("bench", help="Simulate a list of instances and compare with best-known TMS")
    bench.add_argument("manifest", type=Path, help="Lines of '<instance_id> <instance path>'")
    bench.add_argument("--best-known", type=Path, help="Best-known CSV (default: packaged MPSPLib table)")
    bench.add_argument("--pool-sum", action="store_true", help="Pool global capacities by summing them")
    run_args(bench, runs=True)
    output_args(bench)

    oracle = commands.add_parser("oracle", help="Exact minimum TMS of a tiny instance")
    instance_args(oracle)
    oracle.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="Search node limit")
    return parser


def _drawer_config(value: str) -> DrawerConfig:
    if value in PRESETS:
        return drawer_config_preset(value)
    return load_drawer_config(value)


def _write(path: Path, text: str) -> None:
    with path.open("w", encoding="utf-8", newline="") as stream:
        stream.write(text)


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output is None:
        sys.stdout.write(text)
    else:
        _write(args.output, text)


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        n_runs=args.runs,
        master_seed=args.seed,
        drawer_config=_drawer_config(args.drawers),
        workers=args.workers,
        fast_forward=not args.no_fast_forward,
    )


def _cmd_solve(args: argparse.Namespace, portfolio: Portfolio) -> int:
    # Same seed as replication 0 of `simulate --seed`.
    seed = derive_seed(args.seed, 0)
    schedule = run_psgs(portfolio, _drawer_config(args.drawers), seed, fast_forward=not args.no_fast_forward)
    print(f"TMS={schedule.tms}")
    if args.output is not None:
        _write(args.output, export_schedule(schedule, portfolio, args.format))
    if args.gantt is not None:
        render_gantt(schedule, portfolio).save(args.gantt)
    return EXIT_OK


def _log_progress(total: int) -> ProgressCallback:
    step = max(1, total // 10)

    def progress(run_index: int, tms: int, running_best: int) -> None:
        _LOGGER.debug("Run %d: TMS %d (best %d)", run_index, tms, running_best)
        if (run_index + 1) % step == 0 or run_index + 1 == total:
            _LOGGER.info("Progress %d/%d runs, best TMS %d", run_index + 1, total, running_best)

    return progress


def _samples_csv(result: SimulationResult) -> str:
    lines = ["run,tms,running_best"]
    for index, (tms, best) in enumerate(zip(result.tms_samples, result.running_best, strict=True)):
        lines.append(f"{index},{tms},{best}")
    return "\n".join(lines) + "\n"


def _cmd_simulate(args: argparse.Namespace, portfolio: Portfolio) -> int:
    cfg = _run_config(args)
    result = simulate(portfolio, cfg, progress=_log_progress(cfg.n_runs))
    print(
        f"TMS={result.best_tms} best_run={result.best_run_index} runs={cfg.n_runs} "
        f"mean={result.mean_tms:.2f} std={result.std_tms:.2f}"
    )
    if args.output is not None:
        _write(args.output, export_schedule(result.best, portfolio, args.format))
    if args.samples is not None:
        _write(args.samples, _samples_csv(result))
    if args.gantt is not None:
        render_gantt(result.best, portfolio).save(args.gantt)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace, portfolio: Portfolio) -> int:
    report = validate_portfolio(portfolio)
    if report:
        for violation in report.violations:
            print(f"{violation.code} {violation.subject}: {violation.message}")
        return EXIT_VIOLATIONS
    if args.schedule is None:
        print(f"valid: {len(portfolio.projects)} project(s), {portfolio.activity_count} activities")
        return EXIT_OK
    starts = import_schedule(read_text_file(args.schedule, "Schedule file"), args.format)
    feasibility = check_feasibility(portfolio, starts)
    if feasibility:
        for v in feasibility.violations:
            print(f"{v.kind} {v.describe()}")
        return EXIT_VIOLATIONS
    print(f"feasible: TMS={Schedule.from_starts(portfolio, starts).tms}")
    return EXIT_OK


def _cmd_auf(args: argparse.Namespace, portfolio: Portfolio) -> int:
    print("resource,scope,capacity,auf")
    for rid, value in auf(portfolio, args.horizon).items():
        resource = portfolio.resource(rid)
        shown = "inf" if value == math.inf else f"{float(value):.4f}"
        print(f"{resource.label},{resource.scope.name.lower()},{resource.capacity},{shown}")
    return EXIT_OK


def _read_manifest(path: Path) -> list[tuple[str, Path]]:
    entries: list[tuple[str, Path]] = []
    for line_number, line in enumerate(read_text_file(path, "Manifest").splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError(f"malformed manifest line {line.strip()!r}", line_number, "<instance_id> <path>")
        instance = Path(tokens[1])
        entries.append((tokens[0], instance if instance.is_absolute() else path.parent / instance))
    return entries


def _cmd_bench(args: argparse.Namespace) -> int:
    best_known = load_best_known(args.best_known)
    cfg = _run_config(args)
    results: list[tuple[str, SimulationResult | int]] = []
    for instance_id, instance_path in _read_manifest(args.manifest):
        portfolio = load_portfolio(instance_path, pool_sum=args.pool_sum)
        result = simulate(portfolio, cfg)
        _LOGGER.info("Instance %s: TMS %d in %.2fs", instance_id, result.best_tms, result.wall_time)
        results.append((instance_id, result))
    rows, summary = benchmark_report(results, best_known)
    _emit(args, export_benchmark(rows, summary, args.format))
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace, portfolio: Portfolio) -> int:
    optimum = brute_force_optimal(portfolio, args.budget)
    print("unknown" if optimum is None else optimum)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        if args.command == "bench":
            return _cmd_bench(args)
        portfolio = load_portfolio(args.instance, pool_sum=args.pool_sum)
        handlers = {
            "solve": _cmd_solve,
            "simulate": _cmd_simulate,
            "validate": _cmd_validate,
            "auf": _cmd_auf,
            "oracle": _cmd_oracle,
        }
        return handlers[args.command](args, portfolio)
    except DrawerSchedError as e:
        print(f"error [{e.code}]: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

    genstar     write the star and displaced-star test frames
    trajectory  point/step counts of every method on a unimodal oracle
    estimate    estimate a vector field for a frame pair
    compensate  build the motion-compensated prediction from a field
    metrics     entropy / variance / PSNR of a prediction
    bench       time and score several methods on a frame pair

Reports go to stdout; diagnostics go to stderr through logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence

from . import __version__
from .bench import render_report, render_trajectory, run_benchmark, run_trajectory_table
from .compensation import (
    FieldStats,
    build_prediction,
    estimate_field,
    load_field,
    residual,
    save_field,
)
from .frame_io import StarSpec, export_residual_view, generate_displaced_star, generate_star, load_pgm, save_pgm
from .matchers import ModConjOptions, available_algorithms
from .metrics import report as metric_report
from .runtime import settings
from .search import Criterion, SearchConfig

logger = logging.getLogger("blockmatch")


def _options(args: argparse.Namespace) -> ModConjOptions:
    return ModConjOptions(
        variation1=args.variation1,
        variation2=args.variation2,
        full_cda=getattr(args, "full_cda", False),
    )


def _search_config(args: argparse.Namespace, *, stop_on_zero: bool = True) -> SearchConfig:
    return SearchConfig(
        block_size=args.block,
        dm=args.dm,
        criterion=Criterion(args.criterion),
        stop_on_zero=stop_on_zero,
    )


def _write(text: str) -> None:
    sys.stdout.write(text)


def cmd_genstar(args: argparse.Namespace) -> int:
    spec = StarSpec(
        image_size=args.size,
        square_size=args.block,
        pitch=args.pitch,
        max_displacement=args.max_disp,
    )
    save_pgm(generate_star(spec), args.out)
    logger.info("Wrote star %dx%d to %s", spec.image_size, spec.image_size, args.out)
    if args.displaced:
        save_pgm(generate_displaced_star(spec), args.displaced)
        logger.info("Wrote displaced star to %s", args.displaced)
    return 0


def cmd_trajectory(args: argparse.Namespace) -> int:
    _write(render_trajectory(run_trajectory_table(dm=args.dm), args.format))
    return 0


def cmd_estimate(args: argparse.Namespace) -> int:
    prev = load_pgm(args.prev)
    cur = load_pgm(args.cur)
    config = _search_config(args, stop_on_zero=not args.no_zero_stop)
    field = estimate_field(prev, cur, config, args.algo, _options(args), workers=args.workers)
    save_field(field, args.field)
    stats = FieldStats.of(field)
    logger.info(
        "Estimated %d blocks: %d points, %d steps -> %s", stats.blocks, stats.points, stats.steps, args.field
    )
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as handle:
            handle.write(stats.render())
    return 0


def cmd_compensate(args: argparse.Namespace) -> int:
    prev = load_pgm(args.prev)
    field = load_field(args.field, args.block)
    pred = build_prediction(prev, field, SearchConfig(block_size=args.block))
    save_pgm(pred, args.pred)
    logger.info("Wrote prediction to %s", args.pred)
    if args.residual_view:
        if not args.cur:
            raise ValueError("--residual-view needs --cur: the residual is current minus prediction.")
        save_pgm(export_residual_view(residual(load_pgm(args.cur), pred)), args.residual_view)
        logger.info("Wrote residual view to %s", args.residual_view)
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    record = metric_report(load_pgm(args.cur), load_pgm(args.pred)).to_record()
    _write(json.dumps(record, sort_keys=False) + "\n")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    algorithms = None if args.algos == "all" else [name.strip() for name in args.algos.split(",") if name.strip()]
    result = run_benchmark(
        load_pgm(args.prev),
        load_pgm(args.cur),
        _search_config(args),
        algorithms,
        _options(args),
        repeats=args.repeats,
    )
    _write(render_report(result, args.format))
    return 0


def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dm", type=int, default=6, help="Maximum displacement per axis (default: 6)")
    parser.add_argument("--block", type=int, default=16, help="Block size N (default: 16)")
    parser.add_argument("--criterion", choices=[c.value for c in Criterion], default="mad")
    parser.add_argument("--variation1", action="store_true", help="Modified conjugate: defer the X refinement")
    parser.add_argument("--variation2", action="store_true", help="Modified conjugate: single-probe refinement")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockmatch", description="Block matching motion estimation toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Logging level (default: BLOCKMATCH_LOG_LEVEL or INFO)")
    sub = parser.add_subparsers(dest="command", required=True)

    genstar = sub.add_parser("genstar", help="Write the star / displaced-star test frames")
    genstar.add_argument("--out", required=True, help="Star PGM to write")
    genstar.add_argument("--displaced", help="Displaced-star PGM to write")
    genstar.add_argument("--size", type=int, default=512)
    genstar.add_argument("--block", type=int, default=16, help="Square size (default: 16)")
    genstar.add_argument("--pitch", type=int, default=32)
    genstar.add_argument("--max-disp", type=int, default=7)
    genstar.set_defaults(handler=cmd_genstar)

    trajectory = sub.add_parser("trajectory", help="Points/steps of every method on a unimodal oracle")
    trajectory.add_argument("--dm", type=int, default=6)
    trajectory.add_argument("--format", choices=["table", "csv"], default="table")
    trajectory.set_defaults(handler=cmd_trajectory)

    estimate = sub.add_parser("estimate", help="Estimate a vector field for a frame pair")
    estimate.add_argument("--prev", required=True)
    estimate.add_argument("--cur", required=True)
    estimate.add_argument("--algo", required=True, choices=available_algorithms())
    _add_search_flags(estimate)
    estimate.add_argument("--full-cda", action="store_true", help="ots: alternate axes until stable")
    estimate.add_argument("--no-zero-stop", action="store_true", help="Keep searching after a zero-error point")
    estimate.add_argument("--field", required=True, help="Vector field CSV to write")
    estimate.add_argument("--stats", help="Write aggregate search statistics here")
    estimate.add_argument("--workers", type=int, default=None, help="Threads (default: BLOCKMATCH_WORKERS or 1)")
    estimate.set_defaults(handler=cmd_estimate)

    compensate = sub.add_parser("compensate", help="Build the motion-compensated prediction")
    compensate.add_argument("--prev", required=True)
    compensate.add_argument("--field", required=True)
    compensate.add_argument("--pred", required=True, help="Prediction PGM to write")
    compensate.add_argument("--block", type=int, default=16)
    compensate.add_argument("--cur", help="Current frame (needed for --residual-view)")
    compensate.add_argument("--residual-view", help="Write the residual as a mid-gray-centred PGM")
    compensate.set_defaults(handler=cmd_compensate)

    metrics = sub.add_parser("metrics", help="Entropy, variance and PSNR of a prediction")
    metrics.add_argument("--cur", required=True)
    metrics.add_argument("--pred", required=True)
    metrics.set_defaults(handler=cmd_metrics)

    bench = sub.add_parser("bench", help="Time and score methods on a frame pair")
    bench.add_argument("--prev", required=True)
    bench.add_argument("--cur", required=True)
    bench.add_argument("--algos", default="all", help="'all' or a comma-separated list of algorithm names")
    _add_search_flags(bench)
    bench.add_argument("--format", choices=["table", "csv"], default="table")
    bench.add_argument("--repeats", type=int, default=None, help="Timed runs per method (default: 5)")
    bench.set_defaults(handler=cmd_bench)
    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        level = args.log_level.upper() if args.log_level else settings.log_level()
        logging.basicConfig(level=level, format="%(message)s")
        logger.setLevel(level)
        if getattr(args, "workers", 1) is None:
            args.workers = settings.workers()
        return args.handler(args)
    except (OSError, ValueError, RuntimeError) as exc:
        logger.error("error: %s", exc)
        return 1


def main() -> None:
    raise SystemExit(cli_main())

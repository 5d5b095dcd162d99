"""Text renderings of benchmark and trajectory results (aligned table or CSV)."""

from __future__ import annotations

import csv
import io
from typing import Literal

from .benchmark import BenchReport
from .trajectory import TrajectoryRow

ReportFormat = Literal["table", "csv"]

BENCH_COLUMNS = ("method", "points", "steps", "time_s", "relative_pct", "entropy_bits", "normalized_cost")
TRAJECTORY_COLUMNS = ("method", "points_a", "points_b", "steps_a", "steps_b")


def _csv(header: tuple[str, ...], rows: list[list[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(cell) for cell in column) for column in zip(header, *rows)]
    lines = []
    for cells in [header, *rows]:
        first, *rest = cells
        lines.append("  ".join([first.ljust(widths[0]), *(c.rjust(w) for c, w in zip(rest, widths[1:]))]))
    return "\n".join(lines) + "\n"


def render_report(report: BenchReport, fmt: ReportFormat = "table") -> str:
    """Benchmark rows in a fixed column order."""
    if not report.rows:
        raise ValueError("Nothing to render: the report has no rows.")
    cells = [
        [
            row.label,
            str(row.points),
            str(row.steps),
            f"{row.wall_time_s:.6f}",
            f"{row.relative_time_pct:.2f}",
            f"{row.entropy_bits:.4f}",
            f"{row.normalized_cost:.6f}",
        ]
        for row in report.rows
    ]
    if fmt == "csv":
        return _csv(BENCH_COLUMNS, cells)
    header = ["METHOD", "POINTS", "STEPS", "TIME (s)", "RELATIVE (%)", "ENTROPY", "NORM. COST"]
    body = [[*c[:4], c[4] + "%", *c[5:]] for c in cells]
    footer = f"plain difference entropy: {report.plain_entropy_bits:.4f} bits/pixel\n"
    return _table(header, body) + footer


def render_trajectory(rows: list[TrajectoryRow], fmt: ReportFormat = "table") -> str:
    """Points/steps for the reference vector (A) and the worst case (B)."""
    cells = []
    for row in rows:
        case = row.vector_case
        cells.append(
            [
                row.label,
                "" if case is None else str(case.result.points),
                str(row.worst_points),
                "" if case is None else str(case.result.steps),
                str(row.worst_steps),
            ]
        )
    if fmt == "csv":
        return _csv(TRAJECTORY_COLUMNS, cells)
    return _table(["METHOD", "POINTS A", "POINTS B", "STEPS A", "STEPS B"], cells)

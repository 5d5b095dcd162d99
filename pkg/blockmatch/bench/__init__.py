"""Benchmarks: trajectory counts on a unimodal oracle, and timed runs on frame pairs."""

from .benchmark import BenchReport, BenchRow, run_benchmark
from .report import render_report, render_trajectory
from .trajectory import (
    DEFAULT_TARGET,
    TRAJECTORY_VARIANTS,
    TrajectoryCase,
    TrajectoryRow,
    oracle_probe,
    run_trajectory_table,
    trace,
)

__all__ = [
    "DEFAULT_TARGET",
    "TRAJECTORY_VARIANTS",
    "BenchReport",
    "BenchRow",
    "TrajectoryCase",
    "TrajectoryRow",
    "oracle_probe",
    "render_report",
    "render_trajectory",
    "run_benchmark",
    "run_trajectory_table",
    "trace",
]

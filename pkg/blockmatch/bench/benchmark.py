"""Benchmark harness: run several algorithms over one frame pair.

Timed sections run single-threaded and are repeated; the median wall time is
reported, and relative times are taken against the 2D logarithmic search
(the oldest of the methods). The point/step totals and entropies are exact
and do not depend on timing.
"""

from __future__ import annotations

import logging
import math
import statistics
import time
from dataclasses import dataclass
from typing import Sequence

from ..compensation import VectorField, build_prediction, estimate_field, plain_difference, residual
from ..errors import FrameMismatchError
from ..frame_io import Frame
from ..matchers import AlgorithmId, ModConjOptions, resolve_algorithm
from ..metrics import entropy
from ..runtime import settings
from ..search import SearchConfig

logger = logging.getLogger(__name__)

REFERENCE_ALGORITHM = AlgorithmId.LOG2D


@dataclass(frozen=True)
class BenchRow:
    algorithm: AlgorithmId
    points: int
    steps: int
    wall_time_s: float
    relative_time_pct: float
    entropy_bits: float
    normalized_cost: float

    @property
    def label(self) -> str:
        return self.algorithm.label


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    plain_entropy_bits: float  # entropy of cur - prev, no motion compensation
    config: SearchConfig


def _timed_field(
    prev: Frame, cur: Frame, config: SearchConfig, algorithm: AlgorithmId, options: ModConjOptions, repeats: int
) -> tuple[VectorField, float]:
    times = []
    field: VectorField | None = None
    for _ in range(repeats):
        start = time.perf_counter()
        field = estimate_field(prev, cur, config, algorithm, options, workers=1)
        times.append(time.perf_counter() - start)
    if field is None:
        raise ValueError(f"repeats must be a positive integer, got {repeats}.")
    return field, statistics.median(times)


def _normalized(cost: int, reference: int) -> float:
    if reference == 0:
        return 1.0 if cost == 0 else math.inf
    return cost / reference


def run_benchmark(
    prev: Frame,
    cur: Frame,
    config: SearchConfig | None = None,
    algorithms: Sequence[AlgorithmId | str] | None = None,
    options: ModConjOptions | None = None,
    *,
    repeats: int | None = None,
) -> BenchReport:
    """Estimate, predict and score every algorithm on ``prev -> cur``.

    Searches always stop at the first zero-error point. The 2D logarithmic
    search is timed even when not requested, since it anchors relative time;
    full search likewise anchors the normalized cost.
    """
    config = (config or SearchConfig()).model_copy(update={"stop_on_zero": True})
    options = options or ModConjOptions()
    repeats = settings.bench_repeats() if repeats is None else repeats
    if repeats < 1:
        raise ValueError(f"repeats must be a positive integer, got {repeats}. Pass --repeats 1 or more.")
    chosen = [resolve_algorithm(a) for a in (algorithms or list(AlgorithmId))]
    if not chosen:
        raise ValueError("The benchmark needs at least one algorithm.")
    if prev.size != cur.size:
        raise FrameMismatchError(
            f"bench: frame sizes differ ({prev.width}x{prev.height} vs {cur.width}x{cur.height})."
        )

    fields: dict[AlgorithmId, VectorField] = {}
    times: dict[AlgorithmId, float] = {}
    for algorithm in dict.fromkeys([*chosen, REFERENCE_ALGORITHM]):
        fields[algorithm], times[algorithm] = _timed_field(prev, cur, config, algorithm, options, repeats)
        logger.info("%-16s %8.4f s (median of %d)", algorithm.label, times[algorithm], repeats)
    if AlgorithmId.FULL_SEARCH not in fields:
        fields[AlgorithmId.FULL_SEARCH] = estimate_field(prev, cur, config, AlgorithmId.FULL_SEARCH)

    reference_time = times[REFERENCE_ALGORITHM]
    reference_cost = fields[AlgorithmId.FULL_SEARCH].total_cost
    rows = []
    for algorithm in chosen:
        field = fields[algorithm]
        pred = build_prediction(prev, field, config)
        relative = 100.0 if algorithm is REFERENCE_ALGORITHM else 100.0 * times[algorithm] / reference_time
        rows.append(
            BenchRow(
                algorithm=algorithm,
                points=field.total_points,
                steps=field.total_steps,
                wall_time_s=times[algorithm],
                relative_time_pct=relative if reference_time > 0 else 100.0,
                entropy_bits=entropy(residual(cur, pred).values),
                normalized_cost=_normalized(field.total_cost, reference_cost),
            )
        )
    return BenchReport(
        rows=tuple(rows),
        plain_entropy_bits=entropy(plain_difference(prev, cur).values),
        config=config,
    )

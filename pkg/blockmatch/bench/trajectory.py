"""Point and step counts on a synthetic unimodal cost surface.

A search trajectory depends only on how candidate costs compare, so the
counts are measured against an oracle whose cost is the distance to a target
displacement rather than on real images. Squared distances keep every
comparison exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..matchers import AlgorithmId, ModConjOptions, run_matcher
from ..search import CostProbe, MatchResult, MotionVector

DEFAULT_TARGET = MotionVector(2, 6)

# (algorithm, options) rows of the table: the six methods, then the variations.
TRAJECTORY_VARIANTS: tuple[tuple[AlgorithmId, ModConjOptions], ...] = (
    (AlgorithmId.FULL_SEARCH, ModConjOptions()),
    (AlgorithmId.LOG2D, ModConjOptions()),
    (AlgorithmId.THREE_STEP, ModConjOptions()),
    (AlgorithmId.CONJUGATE_OTS, ModConjOptions()),
    (AlgorithmId.ORTHOGONAL, ModConjOptions()),
    (AlgorithmId.MODIFIED_CONJUGATE, ModConjOptions()),
    (AlgorithmId.CONJUGATE_OTS, ModConjOptions(full_cda=True)),
    (AlgorithmId.MODIFIED_CONJUGATE, ModConjOptions(variation1=True)),
    (AlgorithmId.MODIFIED_CONJUGATE, ModConjOptions(variation2=True)),
    (AlgorithmId.MODIFIED_CONJUGATE, ModConjOptions(variation1=True, variation2=True)),
)


def oracle_probe(target: MotionVector, dm: int) -> CostProbe:
    """Probe whose cost is the squared Euclidean distance to ``target``; never stops on zero."""

    def cost(mv: MotionVector) -> int:
        return (mv.dx - target.dx) ** 2 + (mv.dy - target.dy) ** 2

    return CostProbe(cost, dm=dm, stop_on_zero=False)


def window(dm: int) -> list[MotionVector]:
    """Every displacement with ``|dx|, |dy| <= dm``, row by row."""
    return [MotionVector(dx, dy) for dy in range(-dm, dm + 1) for dx in range(-dm, dm + 1)]


def trace(
    algorithm: AlgorithmId, target: MotionVector, dm: int, options: ModConjOptions | None = None
) -> tuple[MatchResult, CostProbe]:
    """Run one algorithm against the oracle; the probe is returned for its memo and path."""
    probe = oracle_probe(target, dm)
    return run_matcher(probe, algorithm, options), probe


@dataclass(frozen=True)
class TrajectoryCase:
    target: MotionVector
    dm: int
    result: MatchResult


@dataclass(frozen=True)
class TrajectoryRow:
    algorithm: AlgorithmId
    options: ModConjOptions
    vector_case: TrajectoryCase | None  # the reference target, when it fits the window
    worst_points: int
    worst_steps: int

    @property
    def label(self) -> str:
        return self.algorithm.label + self.options.suffix


def run_trajectory_table(
    dm: int = 6,
    target: MotionVector = DEFAULT_TARGET,
    variants: tuple[tuple[AlgorithmId, ModConjOptions], ...] = TRAJECTORY_VARIANTS,
) -> list[TrajectoryRow]:
    """Points/steps for ``target`` and the worst case over every target in the window."""
    if dm < 1:
        raise ValueError(f"dm must be at least 1, got {dm}.")
    targets = window(dm)
    rows = []
    for algorithm, options in variants:
        cases = [TrajectoryCase(t, dm, trace(algorithm, t, dm, options)[0]) for t in targets]
        reference = next((case for case in cases if case.target == target), None)
        rows.append(
            TrajectoryRow(
                algorithm=algorithm,
                options=options,
                vector_case=reference,
                worst_points=max(case.result.points for case in cases),
                worst_steps=max(case.result.steps for case in cases),
            )
        )
    return rows

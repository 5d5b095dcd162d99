"""Exhaustive search: the optimality baseline."""

from __future__ import annotations

from ..search import ZERO, CostProbe, MotionVector, matcher


@matcher
def full_search(probe: CostProbe) -> MotionVector:
    """Evaluate every valid displacement; one step.

    The zero vector goes first (so identical blocks stop after one point and
    ties keep the zero vector), then the window in row order.
    """
    probe.step()
    incumbent = (ZERO, probe.evaluate(ZERO))
    dm = probe.dm
    candidates = probe.valid_only(
        MotionVector(dx, dy) for dy in range(-dm, dm + 1) for dx in range(-dm, dm + 1) if dx or dy
    )
    return probe.settle(probe.best_of(candidates, incumbent)[0])

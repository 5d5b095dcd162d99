"""Three-step and orthogonal searches: fixed shrinking step schedules."""

from __future__ import annotations

from ..search import ZERO, CostProbe, MotionVector, matcher
from .patterns import Axis, halving_schedule, shift, square


@matcher
def three_step_search(probe: CostProbe) -> MotionVector:
    """One 3x3 pattern per step size (3, 2, 1 for dm=6), recentring on each stage minimum."""
    center = ZERO
    for size in halving_schedule(probe.dm):
        probe.step()
        incumbent = (center, probe.evaluate(center))
        center, _ = probe.best_of(probe.valid_only(square(center, size)), incumbent)
        probe.settle(center)
    return center


@matcher
def orthogonal_search(probe: CostProbe) -> MotionVector:
    """Per step size, a horizontal pair probe then a vertical one; each half is a step."""
    center = ZERO
    for size in halving_schedule(probe.dm):
        for axis in (Axis.X, Axis.Y):
            probe.step()
            incumbent = (center, probe.evaluate(center))
            flanks = probe.valid_only([shift(center, axis, -size), shift(center, axis, size)])
            center, _ = probe.best_of(flanks, incumbent)
            probe.settle(center)
    return center

"""Two-dimensional logarithmic search."""

from __future__ import annotations

from ..search import ZERO, CostProbe, MotionVector, matcher
from .patterns import cross, log_initial_step, square


def _at_boundary(probe: CostProbe, center: MotionVector, step: int) -> bool:
    return any(not probe.valid(mv) for mv in cross(center, step))


@matcher
def log2d_search(probe: CostProbe) -> MotionVector:
    """Cross search that recentres on a better arm and halves when the centre wins.

    Reaching the window boundary also halves the step (after moving there).
    Once the step is 1 the full 3x3 neighbourhood decides.
    """
    size = log_initial_step(probe.dm)
    center = ZERO
    probe.step()
    center_cost = probe.evaluate(center)
    if size == 1:
        return probe.settle(probe.best_of(probe.valid_only(square(center, 1)), (center, center_cost))[0])

    best, best_cost = probe.best_of(probe.valid_only(cross(center, size)), (center, center_cost))
    while True:
        moved = best != center
        center, center_cost = probe.settle(best), best_cost
        if moved and not _at_boundary(probe, center, size):
            probe.step()
            best, best_cost = probe.best_of(probe.valid_only(cross(center, size)), (center, center_cost))
            continue
        size = max(1, size // 2)
        probe.step()
        if size == 1:
            return probe.settle(probe.best_of(probe.valid_only(square(center, 1)), (center, center_cost))[0])
        best, best_cost = probe.best_of(probe.valid_only(cross(center, size)), (center, center_cost))

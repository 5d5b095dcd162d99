"""Conjugate-direction family: OTS / CDA and the modified conjugate direction search.

Both walk one axis at a time: probe the two flanks of the current point, and
while a flank wins keep stepping the same way one point per step. The walk
stops when the centre wins, when the next point leaves the window, or when
the next point is not strictly cheaper. The modified search walks with a
2-pixel stride first and refines with 1 pixel afterwards.
"""

from __future__ import annotations

import math

from ..search import ZERO, CostProbe, MotionVector, matcher
from .patterns import Axis, coordinate, shift
from .types import ModConjOptions

COARSE_STRIDE = 2


def _walk(probe: CostProbe, center: MotionVector, axis: Axis, stride: int) -> MotionVector:
    """Line search along ``axis`` from ``center``; returns the local minimum found."""
    flanks = probe.valid_only([shift(center, axis, -stride), shift(center, axis, stride)])
    if flanks or probe.cost_of(center) is None:
        probe.step()
    best, best_cost = probe.best_of(flanks, (center, probe.evaluate(center)))
    probe.settle(best)
    if best == center:
        return center
    direction = stride if coordinate(best, axis) > coordinate(center, axis) else -stride
    while True:
        ahead = shift(best, axis, direction)
        if not probe.valid(ahead):
            return best
        probe.step()
        cost = probe.evaluate(ahead)
        if cost >= best_cost:
            return best
        best, best_cost = probe.settle(ahead), cost


def _refine(probe: CostProbe, center: MotionVector, axis: Axis) -> MotionVector:
    """Evaluate both 1-pixel neighbours on ``axis`` and keep the cheapest of the three."""
    candidates = probe.valid_only([shift(center, axis, -1), shift(center, axis, 1)])
    if not candidates:
        return center
    probe.step()
    return probe.settle(probe.best_of(candidates, (center, probe.evaluate(center)))[0])


def _flank_costs(probe: CostProbe, center: MotionVector, axis: Axis) -> tuple[float, float]:
    """Memoized costs of the coarse flanks ``(minus, plus)``; unevaluated flanks count as infinite."""
    minus = probe.cost_of(shift(center, axis, -COARSE_STRIDE))
    plus = probe.cost_of(shift(center, axis, COARSE_STRIDE))
    return (math.inf if minus is None else minus, math.inf if plus is None else plus)


def _probe_refine(
    probe: CostProbe, center: MotionVector, axis: Axis, flanks: tuple[float, float]
) -> MotionVector:
    """Single-probe refinement: step toward the cheaper coarse flank (minus side on a tie)."""
    minus, plus = flanks
    candidate = shift(center, axis, 1 if plus < minus else -1)
    if not probe.valid(candidate):
        return center
    probe.step()
    return probe.settle(probe.best_of([candidate], (center, probe.evaluate(center)))[0])


def _adjust(
    probe: CostProbe, center: MotionVector, axis: Axis, flanks: tuple[float, float], single: bool
) -> MotionVector:
    if single:
        return _probe_refine(probe, center, axis, flanks)
    return _refine(probe, center, axis)


@matcher
def ots_search(probe: CostProbe, full_cda: bool = False) -> MotionVector:
    """One-at-a-time search: walk X to a minimum, then Y.

    With ``full_cda`` the X and Y walks repeat until neither moves (the
    conjugate direction algorithm proper).
    """
    center = _walk(probe, ZERO, Axis.X, 1)
    center = _walk(probe, center, Axis.Y, 1)
    if full_cda:
        while True:
            moved = _walk(probe, center, Axis.X, 1)
            if moved == center:
                break
            center = moved
            moved = _walk(probe, center, Axis.Y, 1)
            if moved == center:
                break
            center = moved
    return center


@matcher
def modified_conjugate_search(probe: CostProbe, options: ModConjOptions | None = None) -> MotionVector:
    """Conjugate direction search with a 2-pixel coarse stride and 1-pixel refinement.

    Base order: X coarse, X refine, Y coarse, Y refine. ``variation1`` moves
    the X decision after the Y coarse phase and finishes with a 1-pixel walk on
    both axes. ``variation2`` refines with one probe toward the cheaper coarse
    flank, compared with the flank costs left by that axis's coarse phase.
    """
    options = options or ModConjOptions()
    single = options.variation2

    center = _walk(probe, ZERO, Axis.X, COARSE_STRIDE)
    x_flanks = _flank_costs(probe, center, Axis.X)
    if not options.variation1:
        center = _adjust(probe, center, Axis.X, x_flanks, single)

    center = _walk(probe, center, Axis.Y, COARSE_STRIDE)
    y_flanks = _flank_costs(probe, center, Axis.Y)

    if not options.variation1:
        return _adjust(probe, center, Axis.Y, y_flanks, single)
    if single:
        center = _probe_refine(probe, center, Axis.X, x_flanks)
        return _probe_refine(probe, center, Axis.Y, y_flanks)
    center = _walk(probe, center, Axis.X, 1)
    return _walk(probe, center, Axis.Y, 1)

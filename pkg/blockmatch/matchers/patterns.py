"""Candidate patterns and step schedules shared by the matchers."""

from __future__ import annotations

import math
from enum import Enum

from ..search import MotionVector


class Axis(Enum):
    X = 0
    Y = 1


def shift(mv: MotionVector, axis: Axis, offset: int) -> MotionVector:
    if axis is Axis.X:
        return MotionVector(mv.dx + offset, mv.dy)
    return MotionVector(mv.dx, mv.dy + offset)


def coordinate(mv: MotionVector, axis: Axis) -> int:
    return mv.dx if axis is Axis.X else mv.dy


def cross(center: MotionVector, step: int) -> list[MotionVector]:
    """The four axis neighbours at distance ``step``: left, right, up, down."""
    return [
        shift(center, Axis.X, -step),
        shift(center, Axis.X, step),
        shift(center, Axis.Y, -step),
        shift(center, Axis.Y, step),
    ]


def square(center: MotionVector, step: int) -> list[MotionVector]:
    """The eight neighbours of ``center`` on the ``{-step, 0, step}^2`` grid, row by row."""
    return [
        MotionVector(center.dx + ox, center.dy + oy)
        for oy in (-step, 0, step)
        for ox in (-step, 0, step)
        if ox or oy
    ]


def halving_schedule(dm: int) -> list[int]:
    """Step sizes ``ceil(dm/2)``, then halved (rounding up) down to 1: 3, 2, 1 for dm=6."""
    size = math.ceil(dm / 2)
    sizes = [size]
    while size > 1:
        size = math.ceil(size / 2)
        sizes.append(size)
    return sizes


def log_initial_step(dm: int) -> int:
    """Initial cross spacing of the logarithmic search: 2 for dm in 4..7."""
    return 2 ** max(0, int(math.log2(dm)) - 1)

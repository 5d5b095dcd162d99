"""The memoizing cost probe every matcher consults.

A :class:`CostProbe` answers "what does displacement ``mv`` cost?" for one
block. Each distinct displacement is costed once; repeats come from the memo.
``points_evaluated`` (unique displacements) and ``steps`` (decision stages,
counted by the matchers) are therefore read straight off the probe.

Blocks partition the *previous* frame and are matched forward into the current
frame: the cost of ``mv`` compares the previous-frame block at ``(bx, by)`` with
the current-frame window at ``(bx + dx, by + dy)``.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, ParamSpec

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidCandidateError
from .criteria import Criterion, criterion_sum

logger = logging.getLogger(__name__)

P = ParamSpec("P")


class MotionVector(NamedTuple):
    dx: int
    dy: int

    def __str__(self) -> str:
        return f"({self.dx},{self.dy})"


ZERO = MotionVector(0, 0)


class SearchConfig(BaseModel):
    """Block size, window and criterion shared by every block of a frame."""

    model_config = ConfigDict(frozen=True)

    block_size: int = Field(default=16, ge=1, description="Side N of the square blocks")
    dm: int = Field(default=6, ge=1, description="Maximum displacement per axis")
    criterion: Criterion = Field(default=Criterion.MAD, description="Matching criterion")
    stop_on_zero: bool = Field(default=True, description="Stop a block's search at the first zero-cost point")


def candidate_valid(
    mv: MotionVector,
    origin: tuple[int, int],
    frame_size: tuple[int, int],
    config: SearchConfig,
) -> bool:
    """True iff ``mv`` is inside the window and its displaced block stays inside the frame."""
    if abs(mv.dx) > config.dm or abs(mv.dy) > config.dm:
        return False
    x, y = origin[0] + mv.dx, origin[1] + mv.dy
    width, height = frame_size
    n = config.block_size
    return 0 <= x and x + n <= width and 0 <= y and y + n <= height


class ZeroCostReached(Exception):
    """Raised by a probe with ``stop_on_zero`` when a displacement costs exactly 0."""

    def __init__(self, vector: MotionVector) -> None:
        super().__init__(str(vector))
        self.vector = vector


class CostProbe:
    """Memoizing cost evaluator for one block.

    ``cost_fn`` maps a displacement to an integer cost; ``valid_fn`` decides
    which displacements may be asked for (defaults to the ``|d| <= dm`` window).
    """

    def __init__(
        self,
        cost_fn: Callable[[MotionVector], int],
        *,
        dm: int,
        valid_fn: Callable[[MotionVector], bool] | None = None,
        stop_on_zero: bool = False,
    ) -> None:
        self._cost_fn = cost_fn
        self._valid_fn = valid_fn
        self.dm = dm
        self.stop_on_zero = stop_on_zero
        self.memo: dict[MotionVector, int] = {}
        self.steps = 0
        self.zero_hit: MotionVector | None = None
        self.path: list[MotionVector] = []

    @classmethod
    def for_block(
        cls,
        prev: np.ndarray,
        cur: np.ndarray,
        origin: tuple[int, int],
        config: SearchConfig,
    ) -> CostProbe:
        """Probe for the ``N x N`` block of ``prev`` at ``origin`` (x, y) matched into ``cur``.

        ``prev`` and ``cur`` are pixel arrays; pass them already widened to a
        signed dtype when building many probes over the same frames.
        """
        n = config.block_size
        bx, by = origin
        height, width = cur.shape
        if bx < 0 or by < 0 or bx + n > width or by + n > height:
            raise ValueError(f"Block at {origin} of size {n} does not fit a {width}x{height} frame.")
        reference = prev[by : by + n, bx : bx + n]
        measure = criterion_sum(config.criterion)

        def cost(mv: MotionVector) -> int:
            x, y = bx + mv.dx, by + mv.dy
            return measure(reference, cur[y : y + n, x : x + n])

        def valid(mv: MotionVector) -> bool:
            return candidate_valid(mv, origin, (width, height), config)

        return cls(cost, dm=config.dm, valid_fn=valid, stop_on_zero=config.stop_on_zero)

    @property
    def points_evaluated(self) -> int:
        return len(self.memo)

    def valid(self, mv: MotionVector) -> bool:
        if self._valid_fn is not None:
            return self._valid_fn(mv)
        return abs(mv.dx) <= self.dm and abs(mv.dy) <= self.dm

    def valid_only(self, candidates: Iterable[MotionVector]) -> list[MotionVector]:
        return [mv for mv in candidates if self.valid(mv)]

    def step(self) -> None:
        """Count one decision stage."""
        self.steps += 1

    def settle(self, mv: MotionVector) -> MotionVector:
        """Record ``mv`` as the incumbent (consecutive repeats collapse) and return it."""
        if not self.path or self.path[-1] != mv:
            self.path.append(mv)
        return mv

    def cost_of(self, mv: MotionVector) -> int | None:
        """Memoized cost of ``mv``, or ``None`` if it was never evaluated."""
        return self.memo.get(mv)

    def evaluate(self, mv: MotionVector) -> int:
        """Cost of ``mv``; the first request for each displacement is the only real evaluation."""
        cached = self.memo.get(mv)
        if cached is not None:
            return cached
        if not self.valid(mv):
            raise InvalidCandidateError(f"Displacement {mv} is outside the search window (dm={self.dm}).")
        cost = int(self._cost_fn(mv))
        self.memo[mv] = cost
        if cost == 0 and self.stop_on_zero:
            self.zero_hit = mv
            raise ZeroCostReached(mv)
        return cost

    def best_of(
        self,
        candidates: Iterable[MotionVector],
        incumbent: tuple[MotionVector, int] | None = None,
    ) -> tuple[MotionVector, int]:
        """Evaluate ``candidates`` in order and return the cheapest.

        Only a strictly lower cost replaces the incumbent, so ties go to the
        incumbent and then to the earliest candidate.
        """
        best = incumbent
        for mv in candidates:
            cost = self.evaluate(mv)
            if best is None or cost < best[1]:
                best = (mv, cost)
        if best is None:
            raise ValueError("best_of needs at least one candidate or an incumbent.")
        return best

    def minimum_cost(self) -> int:
        """Smallest memoized cost."""
        return min(self.memo.values())


@dataclass(frozen=True, slots=True)
class MatchResult:
    vector: MotionVector
    cost: int
    points: int
    steps: int
    early_stopped: bool = False


def matcher(search: Callable[P, MotionVector]) -> Callable[P, MatchResult]:
    """Turn a search returning its final vector into one returning a :class:`MatchResult`.

    The wrapped search takes the probe as its first argument. A zero-cost stop
    raised by the probe ends the search early with the zero-cost vector.
    """

    @functools.wraps(search)
    def run(*args: P.args, **kwargs: P.kwargs) -> MatchResult:
        probe = args[0] if args else None
        if not isinstance(probe, CostProbe):
            raise TypeError(f"{search.__name__} must be called with a CostProbe as its first argument.")
        try:
            vector = search(*args, **kwargs)
            early = False
        except ZeroCostReached as hit:
            vector = hit.vector
            early = True
        return MatchResult(
            vector=vector,
            cost=probe.memo[vector],
            points=probe.points_evaluated,
            steps=probe.steps,
            early_stopped=early,
        )

    return run

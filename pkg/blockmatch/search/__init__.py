"""Matching criteria, the search window and the memoizing cost probe."""

from .criteria import SQUARE_TABLE, Criterion, criterion_sum, mad, mse, normalize, sad, sse
from .probe import (
    ZERO,
    CostProbe,
    MatchResult,
    MotionVector,
    SearchConfig,
    ZeroCostReached,
    candidate_valid,
    matcher,
)

__all__ = [
    "SQUARE_TABLE",
    "ZERO",
    "CostProbe",
    "Criterion",
    "MatchResult",
    "MotionVector",
    "SearchConfig",
    "ZeroCostReached",
    "candidate_valid",
    "criterion_sum",
    "mad",
    "matcher",
    "mse",
    "normalize",
    "sad",
    "sse",
]

"""Block matching criteria.

Costs are carried as exact integer sums (sum of absolute differences for MAD,
sum of squared differences for MSE). Dividing by the pixel count only happens
for reporting, so comparing two candidates never depends on rounding.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable

import numpy as np

from ..errors import FrameMismatchError

# Squares of every 8-bit difference, indexed by ``difference + 255``.
SQUARE_TABLE: np.ndarray = np.arange(-255, 256, dtype=np.int64) ** 2


class Criterion(str, Enum):
    MAD = "mad"
    MSE = "mse"


def _difference(block_a: np.ndarray, block_b: np.ndarray) -> np.ndarray:
    a = np.asarray(block_a)
    b = np.asarray(block_b)
    if a.shape != b.shape:
        raise FrameMismatchError(f"Cannot compare blocks of shapes {a.shape} and {b.shape}.")
    return a.astype(np.int32, copy=False) - b.astype(np.int32, copy=False)


def sad(block_a: np.ndarray, block_b: np.ndarray) -> int:
    """Sum of absolute differences."""
    return int(np.abs(_difference(block_a, block_b)).sum())


def sse(block_a: np.ndarray, block_b: np.ndarray) -> int:
    """Sum of squared differences, squares taken from :data:`SQUARE_TABLE`."""
    return int(SQUARE_TABLE[_difference(block_a, block_b) + 255].sum())


def mad(block_a: np.ndarray, block_b: np.ndarray) -> float:
    """Mean absolute difference."""
    return sad(block_a, block_b) / np.asarray(block_a).size


def mse(block_a: np.ndarray, block_b: np.ndarray) -> float:
    """Mean squared difference (lookup-table squares)."""
    return sse(block_a, block_b) / np.asarray(block_a).size


CRITERION_SUMS: dict[Criterion, Callable[[np.ndarray, np.ndarray], int]] = {
    Criterion.MAD: sad,
    Criterion.MSE: sse,
}


def criterion_sum(criterion: Criterion) -> Callable[[np.ndarray, np.ndarray], int]:
    """Integer-sum function for ``criterion``."""
    return CRITERION_SUMS[Criterion(criterion)]


def normalize(cost: int, block_size: int) -> float:
    """Turn an integer criterion sum into the mean reported to users."""
    return cost / (block_size * block_size)

"""Objective quality measures of a prediction.

Entropy is the measure that matters for differential coding: a residual made
of two well separated levels has a large variance (and a poor PSNR) yet costs
a single bit per pixel. Variance and PSNR are reported for comparison.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .errors import FrameMismatchError
from .frame_io import Frame

PEAK = 255


class MetricReport(BaseModel):
    """Quality of one prediction; ``psnr_db`` is absent when the prediction is exact."""

    model_config = ConfigDict(frozen=True)

    entropy_bits: float = Field(ge=0, description="First-order entropy of the residual, bits/pixel")
    variance: float = Field(ge=0, description="Population variance of the residual, squared grey levels")
    psnr_db: float | None = Field(default=None, description="PSNR with peak 255; None for zero error")

    def to_record(self) -> dict[str, float]:
        return self.model_dump(exclude_none=True)


def _as_array(values: Iterable[int] | np.ndarray) -> np.ndarray:
    array = np.asarray(values if isinstance(values, np.ndarray) else list(values), dtype=np.int64).ravel()
    if array.size == 0:
        raise ValueError("Metrics need at least one value.")
    return array


def entropy(values: Iterable[int] | np.ndarray) -> float:
    """First-order entropy ``-sum p log2 p`` of the value histogram, in bits per value."""
    array = _as_array(values)
    _, counts = np.unique(array, return_counts=True)
    p = counts / array.size
    return float(max(0.0, -(p * np.log2(p)).sum()))


def variance(values: Iterable[int] | np.ndarray) -> float:
    """Population variance, from exact integer sums."""
    array = _as_array(values)
    n = array.size
    s1 = int(array.sum())
    s2 = int((array * array).sum())
    return (n * s2 - s1 * s1) / (n * n)


def psnr(cur: Frame, pred: Frame) -> float | None:
    """``10 log10(255^2 / MSE)``; ``None`` when the frames are identical (zero error)."""
    if cur.size != pred.size:
        raise FrameMismatchError(
            f"psnr: frame sizes differ ({cur.width}x{cur.height} vs {pred.width}x{pred.height})."
        )
    diff = cur.pixels.astype(np.int64) - pred.pixels.astype(np.int64)
    sse = int((diff * diff).sum())
    if sse == 0:
        return None
    return 10 * math.log10(PEAK * PEAK * diff.size / sse)


def report(cur: Frame, pred: Frame) -> MetricReport:
    """Entropy, variance and PSNR of ``cur - pred``."""
    if cur.size != pred.size:
        raise FrameMismatchError(
            f"metrics: frame sizes differ ({cur.width}x{cur.height} vs {pred.width}x{pred.height})."
        )
    values = cur.pixels.astype(np.int64) - pred.pixels.astype(np.int64)
    return MetricReport(entropy_bits=entropy(values), variance=variance(values), psnr_db=psnr(cur, pred))

"""Motion-compensated differential prediction.

Pipeline for one frame pair:

    1. split the previous frame into non-overlapping N x N blocks;
    2. estimate a motion vector per block (:func:`estimate_field`);
    3. push every block forward along its vector to build the prediction
       (:func:`build_prediction`): pixels reached by several blocks take the
       rounded average, pixels reached once take that value, and pixels no
       block reaches keep the previous frame's value;
    4. the residual is ``current - prediction`` (:func:`residual`), kept at
       full signed precision so :func:`reconstruct` is lossless.

Frame dimensions need not be multiples of N: the right/bottom remainder
belongs to no block, so it is predicted only where a displaced block lands
and otherwise falls back to the previous frame.
"""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FieldMismatchError, FrameMismatchError, ReconstructionRangeError
from .frame_io import Frame
from .matchers import AlgorithmId, ModConjOptions, resolve_algorithm, run_matcher
from .search import CostProbe, MotionVector, SearchConfig

logger = logging.getLogger(__name__)

FIELD_CSV_HEADER = ("block_x", "block_y", "dx", "dy", "cost", "points", "steps")


@dataclass(frozen=True, slots=True)
class BlockEstimate:
    block_x: int
    block_y: int
    vector: MotionVector
    cost: int
    points: int
    steps: int
    early_stopped: bool = False


@dataclass(frozen=True)
class VectorField:
    """Per-block motion vectors (row-major block order) plus search statistics."""

    blocks_x: int
    blocks_y: int
    block_size: int
    entries: tuple[BlockEstimate, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.blocks_x * self.blocks_y:
            raise FieldMismatchError(
                f"A {self.blocks_x}x{self.blocks_y} field needs {self.blocks_x * self.blocks_y} "
                f"entries, got {len(self.entries)}."
            )

    def at(self, block_x: int, block_y: int) -> BlockEstimate:
        return self.entries[block_y * self.blocks_x + block_x]

    def origin(self, entry: BlockEstimate) -> tuple[int, int]:
        """Pixel origin (x, y) of ``entry``'s block in the previous frame."""
        return entry.block_x * self.block_size, entry.block_y * self.block_size

    def vectors(self) -> np.ndarray:
        """``(blocks_y, blocks_x, 2)`` array of ``(dx, dy)``."""
        return np.array([e.vector for e in self.entries], dtype=np.int32).reshape(self.blocks_y, self.blocks_x, 2)

    @property
    def total_points(self) -> int:
        return sum(e.points for e in self.entries)

    @property
    def total_steps(self) -> int:
        return sum(e.steps for e in self.entries)

    @property
    def total_cost(self) -> int:
        return sum(e.cost for e in self.entries)


@dataclass(frozen=True)
class FieldStats:
    """Aggregate search statistics of a field."""

    blocks: int
    points: int
    steps: int
    cost: int
    early_stops: int

    @classmethod
    def of(cls, field: VectorField) -> FieldStats:
        return cls(
            blocks=len(field.entries),
            points=field.total_points,
            steps=field.total_steps,
            cost=field.total_cost,
            early_stops=sum(e.early_stopped for e in field.entries),
        )

    def render(self) -> str:
        """``key=value`` lines."""
        return "".join(f"{key}={value}\n" for key, value in vars(self).items())


@dataclass(frozen=True, eq=False)
class ResidualImage:
    """Signed per-pixel prediction error in ``[-255, 255]``."""

    values: np.ndarray

    def __post_init__(self) -> None:
        array = np.asarray(self.values)
        if array.ndim != 2:
            raise ValueError(f"A residual needs a 2-D array, got shape {array.shape}.")
        if array.size and (array.min() < -255 or array.max() > 255):
            raise ValueError(
                f"Residual values must lie in [-255, 255], got [{array.min()}, {array.max()}]."
            )
        array = array.astype(np.int16)
        array.setflags(write=False)
        object.__setattr__(self, "values", array)

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidualImage):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    __hash__ = None  # type: ignore[assignment]


def _require_same_size(a: Frame, b: Frame, what: str) -> None:
    if a.size != b.size:
        raise FrameMismatchError(
            f"{what}: frame sizes differ ({a.width}x{a.height} vs {b.width}x{b.height})."
        )


def block_grid(width: int, height: int, block_size: int) -> tuple[int, int]:
    """Number of whole blocks across and down."""
    return width // block_size, height // block_size


# ============================================================================
# Estimation
# ============================================================================


def estimate_field(
    prev: Frame,
    cur: Frame,
    config: SearchConfig | None = None,
    algorithm: AlgorithmId | str = AlgorithmId.MODIFIED_CONJUGATE,
    options: ModConjOptions | None = None,
    *,
    workers: int = 1,
) -> VectorField:
    """Estimate one motion vector per block of ``prev`` matched forward into ``cur``.

    Each block gets a fresh :class:`CostProbe`; blocks are independent, so
    ``workers > 1`` spreads them over a thread pool without changing results.
    """
    config = config or SearchConfig()
    algorithm = resolve_algorithm(algorithm)
    options = options or ModConjOptions()
    _require_same_size(prev, cur, "estimate_field")
    if workers < 1:
        raise ValueError(f"workers must be a positive integer, got {workers}. Use 1 to run inline.")
    n = config.block_size
    if n > prev.width or n > prev.height:
        raise FrameMismatchError(f"Block size {n} exceeds the {prev.width}x{prev.height} frame.")

    blocks_x, blocks_y = block_grid(prev.width, prev.height, n)
    prev_pixels = prev.pixels.astype(np.int32)
    cur_pixels = cur.pixels.astype(np.int32)

    def estimate(index: int) -> BlockEstimate:
        block_y, block_x = divmod(index, blocks_x)
        probe = CostProbe.for_block(prev_pixels, cur_pixels, (block_x * n, block_y * n), config)
        result = run_matcher(probe, algorithm, options)
        return BlockEstimate(
            block_x=block_x,
            block_y=block_y,
            vector=result.vector,
            cost=result.cost,
            points=result.points,
            steps=result.steps,
            early_stopped=result.early_stopped,
        )

    indices = range(blocks_x * blocks_y)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = tuple(pool.map(estimate, indices))
    else:
        entries = tuple(map(estimate, indices))

    field = VectorField(blocks_x=blocks_x, blocks_y=blocks_y, block_size=n, entries=entries)
    logger.debug(
        "%s: %dx%d blocks, %d points, %d steps",
        algorithm.label,
        blocks_x,
        blocks_y,
        field.total_points,
        field.total_steps,
    )
    return field


# ============================================================================
# Prediction
# ============================================================================


class PredictionAccumulator:
    """Per-pixel running sum and count of the block values pushed onto each pixel."""

    def __init__(self, height: int, width: int) -> None:
        self.sum = np.zeros((height, width), dtype=np.int64)
        self.count = np.zeros((height, width), dtype=np.int32)

    def add(self, block: np.ndarray, origin: tuple[int, int]) -> None:
        x, y = origin
        rows, cols = block.shape
        self.sum[y : y + rows, x : x + cols] += block
        self.count[y : y + rows, x : x + cols] += 1

    def finalize(self, fallback: np.ndarray) -> np.ndarray:
        """Rounded average (ties up) where covered, ``fallback`` where not."""
        count = self.count.astype(np.int64)
        covered = count > 0
        average = (2 * self.sum + count) // np.maximum(2 * count, 1)
        return np.where(covered, average, fallback).astype(np.uint8)


def _check_field(field: VectorField, frame: Frame, config: SearchConfig) -> None:
    if field.block_size != config.block_size:
        raise FieldMismatchError(
            f"Field was estimated with {field.block_size}-pixel blocks, config says {config.block_size}."
        )
    expected = block_grid(frame.width, frame.height, field.block_size)
    if (field.blocks_x, field.blocks_y) != expected:
        raise FieldMismatchError(
            f"A {frame.width}x{frame.height} frame has a {expected[0]}x{expected[1]} block grid, "
            f"the field is {field.blocks_x}x{field.blocks_y}."
        )


def accumulate(prev: Frame, field: VectorField, config: SearchConfig | None = None) -> PredictionAccumulator:
    """Push every previous-frame block along its vector into a fresh accumulator."""
    config = config or SearchConfig(block_size=field.block_size)
    _check_field(field, prev, config)
    n = field.block_size
    accumulator = PredictionAccumulator(prev.height, prev.width)
    for entry in field.entries:
        bx, by = field.origin(entry)
        x, y = bx + entry.vector.dx, by + entry.vector.dy
        if x < 0 or y < 0 or x + n > prev.width or y + n > prev.height:
            raise FieldMismatchError(
                f"Block ({entry.block_x},{entry.block_y}) moved by {entry.vector} leaves the frame."
            )
        accumulator.add(prev.pixels[by : by + n, bx : bx + n], (x, y))
    return accumulator


def build_prediction(prev: Frame, field: VectorField, config: SearchConfig | None = None) -> Frame:
    """Move every previous-frame block along its vector and merge the results."""
    return Frame(accumulate(prev, field, config).finalize(prev.pixels))


def coverage(field: VectorField, width: int, height: int) -> np.ndarray:
    """Number of displaced block windows covering each pixel."""
    count = np.zeros((height, width), dtype=np.int32)
    n = field.block_size
    for entry in field.entries:
        bx, by = field.origin(entry)
        x, y = bx + entry.vector.dx, by + entry.vector.dy
        count[y : y + n, x : x + n] += 1
    return count


# ============================================================================
# Residual
# ============================================================================


def residual(cur: Frame, pred: Frame) -> ResidualImage:
    """``cur - pred``, signed and exact."""
    _require_same_size(cur, pred, "residual")
    return ResidualImage(cur.pixels.astype(np.int16) - pred.pixels.astype(np.int16))


def plain_difference(prev: Frame, cur: Frame) -> ResidualImage:
    """Differential coding without motion compensation: ``cur - prev``."""
    _require_same_size(prev, cur, "plain_difference")
    return ResidualImage(cur.pixels.astype(np.int16) - prev.pixels.astype(np.int16))


def reconstruct(pred: Frame, res: ResidualImage) -> Frame:
    """Decoder side: ``pred + res``, which must stay inside ``[0, 255]``."""
    if (res.width, res.height) != pred.size:
        raise FrameMismatchError(
            f"reconstruct: residual is {res.width}x{res.height}, prediction is {pred.width}x{pred.height}."
        )
    total = pred.pixels.astype(np.int32) + res.values.astype(np.int32)
    if total.min() < 0 or total.max() > 255:
        raise ReconstructionRangeError(
            "prediction + residual leaves [0, 255]; the residual does not belong to this prediction."
        )
    return Frame(total.astype(np.uint8))


# ============================================================================
# Vector field CSV
# ============================================================================


def save_field(field: VectorField, path: str | Path) -> None:
    """Write ``block_x,block_y,dx,dy,cost,points,steps`` rows in block order."""
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(FIELD_CSV_HEADER)
        for e in field.entries:
            writer.writerow((e.block_x, e.block_y, e.vector.dx, e.vector.dy, e.cost, e.points, e.steps))


def load_field(path: str | Path, block_size: int) -> VectorField:
    """Read a field written by :func:`save_field`."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Vector field file not found: {str(path)!r}.")
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != FIELD_CSV_HEADER:
            raise FieldMismatchError(f"{path}: expected header {','.join(FIELD_CSV_HEADER)}, got {header}.")
        try:
            rows = [tuple(int(v) for v in row) for row in reader if row]
            if any(len(row) != len(FIELD_CSV_HEADER) for row in rows):
                raise ValueError
        except ValueError:
            raise FieldMismatchError(f"{path}: every row must hold seven integers.") from None
    if not rows:
        raise FieldMismatchError(f"{path}: the field has no blocks.")
    blocks_x = max(r[0] for r in rows) + 1
    blocks_y = max(r[1] for r in rows) + 1
    ordered = sorted(rows, key=lambda r: (r[1], r[0]))
    if [(r[0], r[1]) for r in ordered] != [(x, y) for y in range(blocks_y) for x in range(blocks_x)]:
        raise FieldMismatchError(f"{path}: block indices do not form a complete {blocks_x}x{blocks_y} grid.")
    entries = tuple(
        BlockEstimate(block_x=bx, block_y=by, vector=MotionVector(dx, dy), cost=cost, points=points, steps=steps)
        for bx, by, dx, dy, cost, points, steps in ordered
    )
    return VectorField(blocks_x=blocks_x, blocks_y=blocks_y, block_size=block_size, entries=entries)

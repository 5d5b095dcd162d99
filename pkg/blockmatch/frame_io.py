"""Frames, binary PGM I/O, the star test pattern and residual views.

A :class:`Frame` is an immutable 8-bit grayscale raster stored as a
``(height, width)`` numpy array, addressed ``pixels[y, x]`` with the origin at
the top-left corner.

The star pattern is a central black square plus eight rays of squares (the
two axes and the two diagonals, both senses) on a white background. The
displaced star pushes ray square ``k`` outward by ``min(k - 1, max_displacement)``
pixels per involved axis, so shown one after the other the two frames look
like an expanding star with every displacement from 0 up to the maximum.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import MalformedHeaderError, TruncatedDataError, UnsupportedMaxvalError

if TYPE_CHECKING:
    from .compensation import ResidualImage

logger = logging.getLogger(__name__)

WHITE = 255
BLACK = 0
MIDGRAY = 128


@dataclass(frozen=True, eq=False)
class Frame:
    """Immutable 8-bit grayscale raster."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        array = np.asarray(self.pixels)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(f"A frame needs a non-empty 2-D pixel array, got shape {array.shape}.")
        if array.dtype != np.uint8:
            if array.size and (array.min() < 0 or array.max() > 255):
                raise ValueError("Frame pixel values must lie in [0, 255].")
            array = array.astype(np.uint8)
        else:
            array = array.copy()
        array.setflags(write=False)
        object.__setattr__(self, "pixels", array)

    @classmethod
    def from_values(cls, width: int, height: int, values: Iterable[int]) -> Frame:
        """Build a frame from a row-major sequence of ``width * height`` values."""
        flat = np.fromiter(values, dtype=np.int64)
        if flat.size != width * height:
            raise ValueError(
                f"Expected {width * height} pixel values for a {width}x{height} frame, got {flat.size}."
            )
        return cls(flat.reshape(height, width))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def size(self) -> tuple[int, int]:
        """``(width, height)``."""
        return self.width, self.height

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Frame):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(np.array_equal(self.pixels, other.pixels))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Frame({self.width}x{self.height})"


# ============================================================================
# PGM (binary P5, maxval 255)
# ============================================================================


def _header_tokens(data: bytes) -> tuple[list[bytes], int]:
    """Split the four header tokens off ``data``; return them and the payload offset."""
    tokens: list[bytes] = []
    pos = 0
    end = len(data)
    while len(tokens) < 4:
        while pos < end:
            byte = data[pos : pos + 1]
            if byte.isspace():
                pos += 1
            elif byte == b"#":
                newline = data.find(b"\n", pos)
                pos = end if newline < 0 else newline + 1
            else:
                break
        start = pos
        while pos < end and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise MalformedHeaderError(f"PGM header ended after {len(tokens)} of 4 fields.")
        tokens.append(data[start:pos])
    # Exactly one whitespace byte separates maxval from the raster.
    if pos >= end or not data[pos : pos + 1].isspace():
        raise MalformedHeaderError("PGM header must end with a single whitespace byte after maxval.")
    return tokens, pos + 1


def _header_int(token: bytes, name: str) -> int:
    try:
        value = int(token.decode("ascii"))
    except (UnicodeDecodeError, ValueError):
        raise MalformedHeaderError(f"PGM {name} {token!r} is not a decimal integer.") from None
    if value < 1:
        raise MalformedHeaderError(f"PGM {name} must be positive, got {value}.")
    return value


def decode_pgm(data: bytes) -> Frame:
    """Decode the bytes of a binary (P5) PGM file with maxval 255."""
    tokens, offset = _header_tokens(data)
    magic = tokens[0]
    if magic == b"P2":
        raise MalformedHeaderError("ASCII PGM (P2) is not supported; convert to binary P5.")
    if magic != b"P5":
        raise MalformedHeaderError(f"Not a binary PGM: magic number {magic!r}, expected b'P5'.")
    width = _header_int(tokens[1], "width")
    height = _header_int(tokens[2], "height")
    maxval = _header_int(tokens[3], "maxval")
    if maxval != 255:
        raise UnsupportedMaxvalError(f"unsupported maxval {maxval}: only 8-bit PGM (maxval 255) is read.")
    expected = width * height
    payload = data[offset : offset + expected]
    if len(payload) < expected:
        raise TruncatedDataError(
            f"PGM payload truncated: {width}x{height} needs {expected} bytes, found {len(payload)}."
        )
    if len(data) > offset + expected:
        logger.debug("Ignoring %d trailing bytes after the PGM raster", len(data) - offset - expected)
    return Frame(np.frombuffer(payload, dtype=np.uint8).reshape(height, width))


def encode_pgm(frame: Frame) -> bytes:
    """Canonical P5 encoding: ``P5\\n<w> <h>\\n255\\n`` then the row-major raster."""
    header = f"P5\n{frame.width} {frame.height}\n255\n".encode("ascii")
    return header + frame.pixels.tobytes()


def load_pgm(path: str | Path) -> Frame:
    """Read a binary PGM file; a missing file raises ``FileNotFoundError``."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"PGM file not found: {str(path)!r}.")
    frame = decode_pgm(path.read_bytes())
    logger.debug("Loaded %s from %s", frame, path)
    return frame


def save_pgm(frame: Frame, path: str | Path) -> None:
    """Write ``frame`` as a binary PGM; an unwritable path raises ``OSError``."""
    Path(path).write_bytes(encode_pgm(frame))
    logger.debug("Wrote %s to %s", frame, path)


# ============================================================================
# Star test pattern
# ============================================================================

# +x, -x, +y, -y, then the four diagonals.
RAYS: tuple[tuple[int, int], ...] = (
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, 1),
    (1, -1),
    (-1, -1),
)


class StarSpec(BaseModel):
    """Geometry of the star / displaced-star pair."""

    model_config = ConfigDict(frozen=True)

    image_size: int = Field(default=512, ge=1, description="Width and height of the square frame")
    square_size: int = Field(default=16, ge=1, description="Side of each black square")
    pitch: int = Field(default=32, ge=1, description="Per-axis distance between consecutive square centres on a ray")
    max_displacement: int = Field(default=7, ge=0, description="Largest outward shift of a displaced square")

    @model_validator(mode="after")
    def _check_geometry(self) -> StarSpec:
        if self.image_size % self.square_size:
            raise ValueError(
                f"square_size {self.square_size} must divide image_size {self.image_size}."
            )
        if self.pitch < self.square_size:
            raise ValueError(
                f"pitch {self.pitch} is smaller than square_size {self.square_size}: squares would overlap."
            )
        return self


@dataclass(frozen=True)
class StarSquare:
    """One black square of the pattern."""

    ray: tuple[int, int]  # (0, 0) for the central square
    index: int  # k along the ray, 0 for the central square
    center: tuple[int, int]  # undisplaced centre (x, y)
    shift: tuple[int, int]  # per-axis displacement applied in the displaced star

    def origin(self, square_size: int) -> tuple[int, int]:
        """Top-left corner (x, y) of the rendered square, shift included."""
        half = square_size // 2
        return self.center[0] - half + self.shift[0], self.center[1] - half + self.shift[1]


def _fits(x: int, y: int, spec: StarSpec) -> bool:
    half = spec.square_size // 2
    left, top = x - half, y - half
    limit = spec.image_size - spec.square_size
    return 0 <= left <= limit and 0 <= top <= limit


def star_squares(spec: StarSpec, *, displaced: bool = False) -> list[StarSquare]:
    """Squares of the star (or displaced star), central square first, then ray by ray."""
    mid = spec.image_size // 2
    squares = [StarSquare(ray=(0, 0), index=0, center=(mid, mid), shift=(0, 0))]
    for ray in RAYS:
        k = 1
        while True:
            cx = mid + ray[0] * k * spec.pitch
            cy = mid + ray[1] * k * spec.pitch
            if not _fits(cx, cy, spec):
                break
            amount = min(k - 1, spec.max_displacement) if displaced else 0
            shift = (ray[0] * amount, ray[1] * amount)
            if _fits(cx + shift[0], cy + shift[1], spec):
                squares.append(StarSquare(ray=ray, index=k, center=(cx, cy), shift=shift))
            k += 1
    return squares


def _render(spec: StarSpec, squares: list[StarSquare]) -> Frame:
    pixels = np.full((spec.image_size, spec.image_size), WHITE, dtype=np.uint8)
    side = spec.square_size
    for square in squares:
        x, y = square.origin(side)
        pixels[y : y + side, x : x + side] = BLACK
    return Frame(pixels)


def generate_star(spec: StarSpec | None = None) -> Frame:
    """Render the star: black squares on white forming an eight-ray asterisk."""
    spec = spec or StarSpec()
    return _render(spec, star_squares(spec))


def generate_displaced_star(spec: StarSpec | None = None) -> Frame:
    """Render the star with ray square ``k`` pushed outward by ``min(k-1, max_displacement)``."""
    spec = spec or StarSpec()
    return _render(spec, star_squares(spec, displaced=True))


# ============================================================================
# Residual visualisation
# ============================================================================


def export_residual_view(residual: ResidualImage) -> Frame:
    """Map signed prediction error to gray: ``clamp(v + 128, 0, 255)``; zero is mid-gray."""
    values = np.asarray(residual.values, dtype=np.int32)
    return Frame(np.clip(values + MIDGRAY, BLACK, WHITE).astype(np.uint8))

"""Frame builders shared by the test modules."""

from __future__ import annotations

import numpy as np

from blockmatch.frame_io import Frame


def random_frame(rng: np.random.Generator, width: int = 64, height: int = 64) -> Frame:
    return Frame(rng.integers(0, 256, size=(height, width), dtype=np.uint8))


def translate(frame: Frame, dx: int, dy: int, fill: int = 255) -> Frame:
    """Shift content by (dx, dy): ``out[y + dy, x + dx] = in[y, x]``; vacated pixels get ``fill``."""
    src = frame.pixels
    height, width = src.shape
    out = np.full_like(src, fill)
    out[max(dy, 0) : height + min(dy, 0), max(dx, 0) : width + min(dx, 0)] = src[
        max(-dy, 0) : height - max(dy, 0), max(-dx, 0) : width - max(dx, 0)
    ]
    return Frame(out)


def square_grid(size: int = 64, block: int = 16, side: int = 6, offset: int = 5) -> Frame:
    """White frame with one black ``side x side`` square per block at ``(offset, offset)``."""
    pixels = np.full((size, size), 255, dtype=np.uint8)
    for y in range(0, size, block):
        for x in range(0, size, block):
            pixels[y + offset : y + offset + side, x + offset : x + offset + side] = 0
    return Frame(pixels)

"""8-bit grayscale output: PNG and PGM.

Byte value is round(255 * v) with no additional transfer curve; the float
buffers are already display-referred.
"""

from __future__ import annotations

import os

import numpy as np
from PIL import Image


def quantize(img: np.ndarray) -> np.ndarray:
    """Clamp to [0, 1] and map to uint8.  The only place clamping happens."""
    return np.rint(255.0 * np.clip(img, 0.0, 1.0)).astype(np.uint8)


def write_png(path: str | os.PathLike, img: np.ndarray) -> None:
    Image.fromarray(quantize(img), mode="L").save(path, format="PNG")


def write_pgm(path: str | os.PathLike, img: np.ndarray) -> None:
    data = quantize(img)
    height, width = data.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        f.write(data.tobytes())


def read_png(path: str | os.PathLike) -> np.ndarray:
    """Load an 8-bit grayscale PNG back to floats in [0, 1]."""
    with Image.open(path) as im:
        return np.asarray(im.convert("L"), dtype=np.float64) / 255.0

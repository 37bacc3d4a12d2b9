"""Procedural backgrounds and average-illumination maps.

Images are float64 numpy arrays of shape (height, width) holding
display-referred luminance in [0, 1].  Scales run dark to light, left to
right, unless flipped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import gaussian_filter


@dataclass(frozen=True)
class White:
    pass


@dataclass(frozen=True)
class DiscreteScale:
    """Step lightness scale; band i of k has luminance i/(k-1)."""

    bands: int = 10
    flipped: bool = False

    def __post_init__(self):
        if self.bands < 2:
            raise ValueError(f"need at least 2 bands, got {self.bands}")


@dataclass(frozen=True)
class ContinuousScale:
    flipped: bool = False


@dataclass(frozen=True)
class Photo:
    """Arbitrary grayscale image used as background."""

    source: np.ndarray

    def __post_init__(self):
        src = np.asarray(self.source, dtype=np.float64)
        if src.ndim != 2:
            raise ValueError("photo source must be a 2-D grayscale array")
        if src.size and (src.min() < 0.0 or src.max() > 1.0):
            raise ValueError("photo luminance must lie in [0, 1]")
        object.__setattr__(self, "source", src)

    # dataclass eq on arrays is unusable; identity is fine here
    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)


BackgroundKind = White | DiscreteScale | ContinuousScale | Photo


def kind_label(kind: BackgroundKind) -> str:
    if isinstance(kind, White):
        return "white"
    if isinstance(kind, DiscreteScale):
        return f"discrete-{kind.bands}"
    if isinstance(kind, ContinuousScale):
        return "continuous"
    return "photo"


def _ramp(width: int) -> np.ndarray:
    if width == 1:
        return np.zeros(1)
    return np.arange(width, dtype=np.float64) / (width - 1)


def generate(kind: BackgroundKind, width: int, height: int) -> np.ndarray:
    """Render a background at the given size."""
    if width < 1 or height < 1:
        raise ValueError(f"image dimensions must be positive, got {width}x{height}")
    if isinstance(kind, White):
        return np.ones((height, width))
    if isinstance(kind, Photo):
        if kind.source.shape != (height, width):
            raise ValueError(
                f"photo is {kind.source.shape[1]}x{kind.source.shape[0]}, "
                f"requested {width}x{height}"
            )
        return kind.source.copy()
    if isinstance(kind, DiscreteScale):
        k = kind.bands
        cols = np.arange(width)
        band = np.minimum(k - 1, cols * k // width)
        row = band / (k - 1)
    else:
        row = _ramp(width)
    if kind.flipped:
        row = row[::-1]
    return np.tile(row, (height, 1))


def blur(img: np.ndarray, sigma: float) -> np.ndarray:
    """Separable Gaussian blur, clamp-to-edge borders, kernel cut at 3 sigma."""
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    out = gaussian_filter(np.asarray(img, dtype=np.float64), sigma, mode="nearest", truncate=3.0)
    return np.clip(out, 0.0, 1.0)


def illumination_at(kind: BackgroundKind, width: int, column: int) -> float:
    """Analytic average illumination at a column, bypassing the blur operator.

    Blurring either lightness scale yields (approximately) the continuous
    ramp, so both scale kinds share the ramp value.  Photos have no analytic
    shortcut and must go through blur().
    """
    if not 0 <= column < width:
        raise ValueError(f"column {column} outside image of width {width}")
    if isinstance(kind, Photo):
        raise ValueError("photo backgrounds have no analytic illumination; use blur()")
    if isinstance(kind, White):
        return 1.0
    if kind.flipped:
        column = width - 1 - column
    return float(_ramp(width)[column])


def illumination_profile(kind: BackgroundKind, width: int) -> np.ndarray:
    """illumination_at for every column, as one array."""
    if isinstance(kind, Photo):
        raise ValueError("photo backgrounds have no analytic illumination; use blur()")
    if isinstance(kind, White):
        return np.ones(width)
    row = _ramp(width)
    return row[::-1].copy() if kind.flipped else row


def default_photo_sigma(width: int, height: int) -> float:
    """Default blur radius for photo illumination: 5% of the image diagonal."""
    return 0.05 * float(np.hypot(width, height))

"""Render the foreground band over a background.

The foreground is a full-width horizontal band, vertically centered, whose
height fraction equals the relative size s (so area fraction = s exactly).
Three modes: the uniform control band, the corrected spatially-varying band,
and the photo overlay with an opaque center line.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import background as bg
from .opacity import OpacityModel, opacity


class Mode(enum.Enum):
    CONSTANT_COLOR = "constant-color"
    CONSTANT_PERCEPTION = "constant-perception"
    PHOTO_OVERLAY = "photo-overlay"


@dataclass(frozen=True)
class CompositeSpec:
    background: bg.BackgroundKind
    s: float
    l_p: float
    mode: Mode
    model: OpacityModel
    swap_weights: bool = False
    edge_profile: float = 2.0  # photo-overlay falloff exponent
    blur_sigma: float | None = None  # required for Photo backgrounds

    def __post_init__(self):
        if not 0.0 < self.s <= 1.0:
            raise ValueError(f"s={self.s!r} outside (0, 1]")
        if not 0.0 <= self.l_p <= 1.0:
            raise ValueError(f"l_p={self.l_p!r} outside [0, 1]")
        if self.edge_profile <= 0.0:
            raise ValueError(f"edge_profile={self.edge_profile!r} must be positive")


def band_rows(s: float, height: int) -> tuple[int, int]:
    """Row range [top, bottom) of the centered foreground band."""
    band_h = round(s * height)
    if band_h < 1:
        raise ValueError(f"band height rounds to 0 for s={s} at height {height}")
    top = (height - band_h) // 2
    return top, top + band_h


def _illumination(spec: CompositeSpec, width: int, height: int) -> np.ndarray:
    """Average-illumination map: analytic ramp for synthetic backgrounds,
    Gaussian blur for photos."""
    if isinstance(spec.background, bg.Photo):
        if spec.blur_sigma is None:
            raise ValueError("photo background requires blur_sigma")
        return bg.blur(bg.generate(spec.background, width, height), spec.blur_sigma)
    row = bg.illumination_profile(spec.background, width)
    return np.tile(row, (height, 1))


def composite(spec: CompositeSpec, width: int, height: int) -> np.ndarray:
    """Render the spec; pixels outside the band are the untouched background."""
    out = bg.generate(spec.background, width, height)
    top, bottom = band_rows(spec.s, height)

    if spec.mode is Mode.CONSTANT_COLOR:
        out[top:bottom, :] = spec.l_p
        return np.clip(out, 0.0, 1.0)

    if spec.mode is Mode.CONSTANT_PERCEPTION:
        y = opacity(spec.model, spec.s)
        i_a = _illumination(spec, width, height)[top:bottom, :]
        if spec.swap_weights:
            out[top:bottom, :] = (1.0 - y) * spec.l_p + y * i_a
        else:
            out[top:bottom, :] = y * spec.l_p + (1.0 - y) * i_a
        return np.clip(out, 0.0, 1.0)

    # Photo overlay: opacity ramps from y at the band edges to 1 on the
    # center line, so the band reads as a solid object with soft sides.
    y = opacity(spec.model, spec.s)
    i_a = _illumination(spec, width, height)[top:bottom, :]
    band_h = bottom - top
    if band_h == 1:
        d = np.ones(1)
    else:
        half = (band_h - 1) / 2.0
        rows = np.arange(band_h, dtype=np.float64)
        d = 1.0 - np.abs(rows - half) / half
    alpha = (y + (1.0 - y) * d**spec.edge_profile)[:, None]
    out[top:bottom, :] = alpha * spec.l_p + (1.0 - alpha) * i_a
    return np.clip(out, 0.0, 1.0)


PANEL_BACKGROUNDS: tuple[bg.BackgroundKind, ...] = (
    bg.White(),
    bg.DiscreteScale(10),
    bg.ContinuousScale(),
)
PANEL_MODES = (Mode.CONSTANT_COLOR, Mode.CONSTANT_PERCEPTION)


def panel_grid(
    s: float,
    l_p: float,
    model: OpacityModel,
    width: int,
    height: int,
    swap_weights: bool = False,
    backgrounds: tuple[bg.BackgroundKind, ...] = PANEL_BACKGROUNDS,
) -> list[tuple[str, Mode, np.ndarray]]:
    """The six comparison panels: a row of uniform control bands over the
    three standard backgrounds, then a row of corrected bands."""
    panels = []
    for mode in PANEL_MODES:
        for kind in backgrounds:
            spec = CompositeSpec(
                background=kind, s=s, l_p=l_p, mode=mode, model=model,
                swap_weights=swap_weights,
            )
            panels.append((bg.kind_label(kind), mode, composite(spec, width, height)))
    return panels


def montage(images: list[np.ndarray], cols: int = 3, gap: int = 4) -> np.ndarray:
    """Tile equally sized panels into a grid with a white gap between them."""
    if not images:
        raise ValueError("no panels to montage")
    h, w = images[0].shape
    rows = (len(images) + cols - 1) // cols
    out = np.ones((rows * h + (rows - 1) * gap, cols * w + (cols - 1) * gap))
    for idx, img in enumerate(images):
        r, c = divmod(idx, cols)
        out[r * (h + gap):r * (h + gap) + h, c * (w + gap):c * (w + gap) + w] = img
    return out

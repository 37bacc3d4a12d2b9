"""Opacity as a function of relative foreground size.

Two families: the power form y = s^f(s) with a Bernstein-form exponent, and
the affine form y = a0*(1-s) + a1*s.  Both are meant to interpolate "an
invisibly small foreground is fully transparent" and "a full-field foreground
is fully opaque" (the affine form only approximately at s=0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.optimize import linprog

from .bezier import BezierPolynomial, evaluate, min_on_grid


@dataclass(frozen=True)
class PowerOpacity:
    """y = s^f(s); the exponent must stay strictly positive on [0, 1]."""

    exponent: BezierPolynomial


@dataclass(frozen=True)
class AffineOpacity:
    """y = a0*(1-s) + a1*s, in Bezier (endpoint) form."""

    a0: float
    a1: float


OpacityModel = Union[PowerOpacity, AffineOpacity]


class OpacityRangeError(ValueError):
    """Affine opacity landed outside [0, 1] for the queried s."""


def opacity(model: OpacityModel, s: float) -> float:
    """Opacity of the foreground at relative size s.

    For the power form, 0^f(0) with f(0) > 0 is defined as 0 (continuity from
    the right).  No clamping is applied; an affine result outside [0, 1] is an
    error rather than silently saturated.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s={s!r} outside [0, 1]")
    if isinstance(model, PowerOpacity):
        if s == 0.0:
            return 0.0
        return s ** evaluate(model.exponent, s)
    y = model.a0 * (1.0 - s) + model.a1 * s
    if not 0.0 <= y <= 1.0:
        raise OpacityRangeError(f"affine opacity {y!r} outside [0, 1] at s={s!r}")
    return y


def fit_affine(
    model: OpacityModel,
    s_min: float = 0.05,
    s_max: float = 1.0,
    samples: int = 96,
) -> tuple[float, float]:
    """Fit a0*(1-s) + a1*s to the model's opacity curve, minimax sense.

    Minimizes the worst absolute deviation over `samples` uniform points in
    [s_min, s_max] (solved as a linear program).  The minimax objective mirrors
    how one judges a straight-line approximation visually, and refitting an
    affine model returns it unchanged.  Very small s is excluded by default
    because the power family necessarily dives to 0 there.
    """
    if not (0.0 <= s_min < s_max <= 1.0):
        raise ValueError(f"need 0 <= s_min < s_max <= 1, got [{s_min}, {s_max}]")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    grid = np.linspace(s_min, s_max, samples)
    target = np.array([opacity(model, float(s)) for s in grid])

    # Variables (a0, a1, t); minimize t subject to |a0(1-s)+a1 s - y| <= t.
    a_ub = np.vstack(
        [
            np.column_stack([1.0 - grid, grid, -np.ones_like(grid)]),
            np.column_stack([-(1.0 - grid), -grid, -np.ones_like(grid)]),
        ]
    )
    b_ub = np.concatenate([target, -target])
    res = linprog(
        c=[0.0, 0.0, 1.0],
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=[(None, None), (None, None), (0.0, None)],
        method="highs",
    )
    if not res.success:
        raise ValueError(f"degenerate sample set: {res.message}")
    return float(res.x[0]), float(res.x[1])


def validate_model(model: OpacityModel) -> list[str]:
    """Validity findings for calibration intake; empty list means valid.

    Power: every Bezier coefficient positive (which guarantees f > 0 on [0,1]
    by the convex-hull property) and the sampled curve positive.  Affine:
    0 < a0 <= a1 <= 1.
    """
    findings = []
    if isinstance(model, PowerOpacity):
        coeffs = model.exponent.coefficients
        for i, b in enumerate(coeffs):
            if b <= 0.0:
                findings.append(f"power exponent coefficient B[{i}]={b} is not positive")
        if not findings and min_on_grid(model.exponent) <= 0.0:
            findings.append("power exponent is not strictly positive on [0, 1]")
    else:
        if not 0.0 < model.a0:
            findings.append(f"affine a0={model.a0} is not positive")
        if model.a0 > model.a1:
            findings.append(f"affine a0={model.a0} exceeds a1={model.a1}")
        if model.a1 > 1.0:
            findings.append(f"affine a1={model.a1} exceeds 1")
    return findings


def model_to_json(model: OpacityModel) -> str:
    """JSON encoding; round-trips bit-exactly at double precision."""
    return json.dumps(model_to_dict(model))


def model_to_dict(model: OpacityModel) -> dict:
    if isinstance(model, PowerOpacity):
        return {"kind": "power", "bezier": list(model.exponent.coefficients)}
    return {"kind": "affine", "a0": model.a0, "a1": model.a1}


def model_from_dict(data: dict) -> OpacityModel:
    kind = data.get("kind")
    if kind == "power":
        return PowerOpacity(BezierPolynomial(tuple(float(b) for b in data["bezier"])))
    if kind == "affine":
        return AffineOpacity(float(data["a0"]), float(data["a1"]))
    raise ValueError(f"unknown opacity model kind: {kind!r}")


def model_from_json(text: str) -> OpacityModel:
    return model_from_dict(json.loads(text))


#: Quadratic power model settled on interactively (exponent 0.7 s^2 + 0.1 s + 0.2).
DEFAULT_POWER = PowerOpacity(BezierPolynomial((0.20, 0.25, 1.00)))

#: Affine shortcut to DEFAULT_POWER (y = 0.4 s + 0.6).
DEFAULT_AFFINE = AffineOpacity(0.6, 1.0)

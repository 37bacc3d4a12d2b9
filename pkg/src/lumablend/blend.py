"""Forward barycentric luminance blend and its algebraic inverse.

forward mixes the foreground's target luminance with the average illumination
around the point; invert recovers the target from an observed value.  The
inverse divides by the opacity, so it diverges as the opacity goes to zero;
callers pick the epsilon below which that is treated as singular.
"""

from __future__ import annotations

from .opacity import AffineOpacity

DEFAULT_EPSILON = 1e-4


class SingularOpacityError(ValueError):
    """Opacity below epsilon; the inverse blend is unusable there."""


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name}={value!r} outside [0, 1]")


def forward(l_p: float, i_a: float, y: float) -> float:
    """Observed luminance y*l_p + (1-y)*i_a.

    A convex combination: the result always lies between l_p and i_a.
    """
    _check_unit("l_p", l_p)
    _check_unit("i_a", i_a)
    _check_unit("y", y)
    return y * l_p + (1.0 - y) * i_a


def invert(l_o: float, i_a: float, y: float, epsilon: float = DEFAULT_EPSILON) -> float:
    """Recover l_p from an observed luminance: (l_o - (1-y)*i_a) / y.

    The result is deliberately unclamped so the amplification near small y
    stays visible to the caller.
    """
    if epsilon <= 0.0:
        raise ValueError(f"epsilon={epsilon!r} must be positive")
    _check_unit("l_o", l_o)
    _check_unit("i_a", i_a)
    _check_unit("y", y)
    if y < epsilon:
        raise SingularOpacityError(f"opacity y={y!r} below epsilon={epsilon!r}")
    return (l_o - (1.0 - y) * i_a) / y


def inverse_range_bound(model: AffineOpacity) -> float:
    """Supremum of the inverse amplification 1/y over s in [0, 1].

    For the affine family this is 1/min(a0, a1), so the inverse is always
    bounded, unlike the power family whose opacity vanishes at s=0.
    """
    if model.a0 <= 0.0 or model.a1 <= 0.0:
        raise ValueError(f"affine coefficients must be positive, got ({model.a0}, {model.a1})")
    return 1.0 / min(model.a0, model.a1)

"""Context-sensitive luminance correction toolkit."""

from .bezier import (
    BezierPolynomial,
    MonomialPolynomial,
    elevate_degree,
    evaluate,
    to_monomial,
)
from .blend import SingularOpacityError, forward, invert, inverse_range_bound
from .background import (
    ContinuousScale,
    DiscreteScale,
    Photo,
    White,
    blur,
    generate,
    illumination_at,
)
from .compositor import CompositeSpec, Mode, composite, montage, panel_grid
from .opacity import (
    DEFAULT_AFFINE,
    DEFAULT_POWER,
    AffineOpacity,
    OpacityRangeError,
    PowerOpacity,
    fit_affine,
    model_from_json,
    model_to_json,
    opacity,
    validate_model,
)

__all__ = [
    "AffineOpacity",
    "BezierPolynomial",
    "CompositeSpec",
    "ContinuousScale",
    "DEFAULT_AFFINE",
    "DEFAULT_POWER",
    "DiscreteScale",
    "Mode",
    "MonomialPolynomial",
    "OpacityRangeError",
    "Photo",
    "PowerOpacity",
    "SingularOpacityError",
    "White",
    "blur",
    "composite",
    "elevate_degree",
    "evaluate",
    "fit_affine",
    "forward",
    "generate",
    "illumination_at",
    "invert",
    "inverse_range_bound",
    "model_from_json",
    "model_to_json",
    "montage",
    "opacity",
    "panel_grid",
    "to_monomial",
    "validate_model",
]

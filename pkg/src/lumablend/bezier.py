"""Polynomials in Bernstein (Bezier) form on [0, 1].

The exponent curves used by the opacity models live here.  Coefficients
interpolate the endpoints and bound the curve in their convex hull, which is
what makes them a usable handle for interactive tuning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class BezierPolynomial:
    """f(s) = sum_i C(n,i) * B[i] * (1-s)^(n-i) * s^i, degree n = len(B) - 1.

    The binomial coefficient is part of the basis, not folded into B.
    """

    coefficients: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise ValueError("BezierPolynomial needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(float(b) for b in self.coefficients)
        )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, s: float) -> float:
        return evaluate(self, s)


@dataclass(frozen=True)
class MonomialPolynomial:
    """c[0] + c[1]*s + ... + c[n]*s^n."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise ValueError("MonomialPolynomial needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(float(c) for c in self.coefficients)
        )

    def __call__(self, s: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * s + c
        return acc


def evaluate(poly: BezierPolynomial, s: float) -> float:
    """Evaluate by repeated linear interpolation (de Casteljau).

    Exact at the endpoints: evaluate(p, 0) == B[0] and evaluate(p, 1) == B[n]
    with no rounding, which downstream code relies on for y(0)=0, y(1)=1.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s={s!r} outside [0, 1]")
    b = list(poly.coefficients)
    n = poly.degree
    for step in range(n):
        for i in range(n - step):
            b[i] = (1.0 - s) * b[i] + s * b[i + 1]
    return b[0]


def to_monomial(poly: BezierPolynomial) -> MonomialPolynomial:
    """Expand the Bernstein form into monomial coefficients.

    Binomial factors are handled in exact rational arithmetic so the expansion
    carries no error beyond the final float conversion.
    """
    n = poly.degree
    out = []
    for k in range(n + 1):
        c = Fraction(0)
        for i in range(k + 1):
            sign = -1 if (k - i) % 2 else 1
            c += sign * comb(n, i) * comb(n - i, k - i) * Fraction(poly.coefficients[i])
        out.append(float(c))
    return MonomialPolynomial(tuple(out))


def elevate_degree(poly: BezierPolynomial) -> BezierPolynomial:
    """Return a degree-(n+1) polynomial pointwise equal to the input.

    Endpoints are carried over unchanged, so tuning can continue from an
    identical curve with one more control value.
    """
    n = poly.degree
    b = poly.coefficients
    out = [b[0]]
    for i in range(1, n + 1):
        t = i / (n + 1)
        out.append(t * b[i - 1] + (1.0 - t) * b[i])
    out.append(b[n])
    return BezierPolynomial(tuple(out))


def min_on_grid(poly: BezierPolynomial, points: int = 1001) -> float:
    """Minimum of the polynomial over a uniform grid on [0, 1]."""
    return min(evaluate(poly, i / (points - 1)) for i in range(points))


def poly_to_json(poly: BezierPolynomial) -> str:
    """Serialize as a JSON array of numbers; degree is implied by length."""
    return json.dumps(list(poly.coefficients))


def poly_from_json(text: str) -> BezierPolynomial:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(v, (int, float)) for v in data):
        raise ValueError("expected a JSON array of numbers")
    return BezierPolynomial(tuple(float(v) for v in data))

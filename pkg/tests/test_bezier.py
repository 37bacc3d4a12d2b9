"""Bernstein-form polynomial behavior."""

import numpy as np
import pytest

from lumablend.bezier import (
    BezierPolynomial,
    elevate_degree,
    evaluate,
    poly_from_json,
    poly_to_json,
    to_monomial,
)

QUADRATIC = BezierPolynomial((0.20, 0.25, 1.00))
GRID = np.linspace(0.0, 1.0, 1001)


def test_endpoint_interpolation():
    assert evaluate(QUADRATIC, 0.0) == 0.20
    assert evaluate(QUADRATIC, 1.0) == 1.00


def test_midpoint_value():
    # direct Bernstein sum: 0.2*0.25 + 0.5*0.5 + 1.0*0.25
    assert evaluate(QUADRATIC, 0.5) == pytest.approx(0.425, abs=1e-15)


def test_domain_error():
    with pytest.raises(ValueError):
        evaluate(QUADRATIC, -0.1)
    with pytest.raises(ValueError):
        evaluate(QUADRATIC, 1.1)


def test_to_monomial_quadratic():
    mono = to_monomial(QUADRATIC)
    assert mono.coefficients == pytest.approx((0.2, 0.1, 0.7), abs=1e-12)


def test_to_monomial_trivial_degrees():
    assert to_monomial(BezierPolynomial((0.37,))).coefficients == (0.37,)
    mono = to_monomial(BezierPolynomial((0.2, 1.0)))
    assert mono.coefficients == pytest.approx((0.2, 0.8), abs=1e-15)


def test_to_monomial_eval_agreement():
    rng = np.random.default_rng(7)
    for degree in range(4):
        poly = BezierPolynomial(tuple(rng.uniform(0.05, 3.0, degree + 1)))
        mono = to_monomial(poly)
        for s in GRID[::10]:
            assert abs(evaluate(poly, float(s)) - mono(float(s))) < 1e-10


def test_elevate_linear():
    assert elevate_degree(BezierPolynomial((0.2, 1.0))).coefficients == (0.2, 0.6, 1.0)


def test_elevate_constant():
    assert elevate_degree(BezierPolynomial((0.4,))).coefficients == (0.4, 0.4)


@pytest.mark.parametrize(
    "coeffs", [(0.2, 1.0), (0.2, 0.6, 1.0), (0.3, 0.9, 0.1, 2.0)]
)
def test_elevate_pointwise_identity(coeffs):
    poly = BezierPolynomial(coeffs)
    lifted = elevate_degree(poly)
    assert lifted.degree == poly.degree + 1
    assert lifted.coefficients[0] == poly.coefficients[0]
    assert lifted.coefficients[-1] == poly.coefficients[-1]
    for s in np.linspace(0.0, 1.0, 101):
        assert abs(evaluate(lifted, float(s)) - evaluate(poly, float(s))) < 1e-12


def test_partition_of_unity():
    for degree in range(4):
        poly = BezierPolynomial((0.42,) * (degree + 1))
        for s in GRID[::25]:
            assert abs(evaluate(poly, float(s)) - 0.42) < 1e-12


def test_convex_hull():
    rng = np.random.default_rng(11)
    for _ in range(20):
        degree = rng.integers(0, 4)
        poly = BezierPolynomial(tuple(rng.uniform(0.01, 4.0, degree + 1)))
        lo, hi = min(poly.coefficients), max(poly.coefficients)
        values = [evaluate(poly, float(s)) for s in GRID]
        assert min(values) >= lo - 1e-12
        assert max(values) <= hi + 1e-12


def test_positive_coefficients_give_positive_curve():
    rng = np.random.default_rng(13)
    for _ in range(50):
        degree = rng.integers(0, 4)
        poly = BezierPolynomial(tuple(rng.uniform(1e-6, 4.0, degree + 1)))
        assert all(evaluate(poly, float(s)) > 0.0 for s in GRID[::10])


def test_json_round_trip():
    text = poly_to_json(QUADRATIC)
    assert poly_from_json(text) == QUADRATIC
    with pytest.raises(ValueError):
        poly_from_json('{"not": "a list"}')

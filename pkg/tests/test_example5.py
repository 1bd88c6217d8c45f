"""The five-particle worked example: spectral data, curves, embedding,
divisor points, incidence and balance limits."""

from fractions import Fraction as F

import pytest

from prymlab.algebra import LaurentSeries, Poly, parse_poly
from prymlab.errors import InvariantError
from prymlab.example5 import (ProjectivePoint9, balance_limit,
                              balance_to_divisor, chart_limit, chart_series,
                              constraint_residual, curve_coords, curve_point,
                              divisor_points, example5_report,
                              fiber_polynomial_5, genus_of_hyperelliptic,
                              incidence_data, principal_balance_params,
                              quotient_curves, rotate_solution,
                              spectral_data_5, z_embedding, z_functions)
from prymlab.painleve import laurent_balance
from prymlab.sampling import km_point
from prymlab.toda import KMPoint, char_poly


# ---------------------------------------------------------------------------
# spectral data and quotient curves
# ---------------------------------------------------------------------------

def test_spectral_data_examples():
    assert spectral_data_5(KMPoint((1, 1, 1, 1, 1))) == (5, 5)
    point = KMPoint((F(2), F(1, 2), F(1), F(1), F(1)))
    assert spectral_data_5(point) == (F(11, 2), F(6))


def test_spectral_data_matches_char_poly(rng):
    for _ in range(20):
        point = km_point(rng, 5)
        k, l = spectral_data_5(point)
        assert char_poly(point.embed()) == Poly([0, 2 * l, 0, -2 * k, 0, 2])


def test_quotient_curve_equation():
    k, l = F(3), F(7)
    curves = quotient_curves(fiber_polynomial_5(k, l), "odd")
    cubic = Poly([0, l, -k, 1])
    assert curves.tau == cubic * cubic - Poly([0, F(4)])
    assert curves.sigma.degree == 5 and curves.tau.degree == 6
    assert genus_of_hyperelliptic(curves.sigma.degree) == 2
    assert genus_of_hyperelliptic(curves.tau.degree) == 2
    swapped = quotient_curves(fiber_polynomial_5(k, l), "even")
    assert swapped.sigma == curves.tau and swapped.tau == curves.sigma


def test_quotient_curve_trivial_and_errors():
    assert quotient_curves(parse_poly("0,0,1"), "odd").sigma == parse_poly("0,1")
    with pytest.raises(InvariantError):
        quotient_curves(parse_poly("0,1"), "odd")


# ---------------------------------------------------------------------------
# the embedding
# ---------------------------------------------------------------------------

def test_z_embedding_at_ones():
    assert z_embedding(KMPoint((1, 1, 1, 1, 1))) \
        == ProjectivePoint9((1, 1, 1, 2, 3, 0, 0, 1, 5))


def test_z5_vanishes_when_a1_equals_a2():
    point = KMPoint((F(2), F(2), F(1, 2), F(1, 2), F(1)))
    assert z_embedding(point).coords[5] == 0


def test_z_normalization_identity(rng):
    # z1 z2 a3 a5 a4 = z2, using prod a = 1
    for _ in range(10):
        point = km_point(rng, 5)
        z = z_functions(point.a, F(1))
        a = point.a
        assert z[1] * z[2] * a[2] * a[4] * a[3] == z[2]


def test_projective_point_semantics():
    p = ProjectivePoint9((0, 0, 0, 1, 0, 0, 0, 0, 0))
    assert p == ProjectivePoint9((0, 0, 0, F(7, 3), 0, 0, 0, 0, 0))
    assert not p == ProjectivePoint9((0, 0, 0, 1, 0, 0, 0, 0, 1))
    with pytest.raises(InvariantError):
        ProjectivePoint9((0,) * 9)


# ---------------------------------------------------------------------------
# divisor data
# ---------------------------------------------------------------------------

def test_divisor_points_display():
    k = F(3)
    points = divisor_points(k)
    assert points[0] == ProjectivePoint9((0, 0, 0, 1, 0, 0, 0, 0, 0))
    assert points[1] == ProjectivePoint9((0, 0, 0, 0, 0, 0, 0, 0, 1))
    assert points[2] == ProjectivePoint9((1, 0, 0, 0, 0, 0, 1, 0, -k))
    assert points[3] == ProjectivePoint9((1, 0, 0, 0, 0, 0, -1, 0, 0))
    assert points[4] == ProjectivePoint9((0, 0, 0, 0, 0, 0, 0, 1, -1))
    for i in range(5):
        for j in range(i + 1, 5):
            assert not points[i] == points[j]


def test_curve_point_constraint():
    k = F(3)
    point = curve_point(1, k, k + 1, F(1), F(1))
    assert point == ProjectivePoint9((0, 0, 0, 1, 0, 2, 2, 1, -1))
    with pytest.raises(InvariantError):
        curve_point(1, k, k + 2, F(1), F(1))


def test_chart_series_solve_the_constraint():
    k, l = F(3), F(7)
    for chart in ("a", "b", "c"):
        beta, delta = chart_series(chart, k, l, order=6)
        residual = constraint_residual(beta, delta, k, l)
        assert residual.is_zero_through(residual.known_through())
    beta_a, _ = chart_series("a", k, l)
    assert beta_a.leading_exponent() == -2
    beta_b, _ = chart_series("b", k, l)
    assert beta_b.leading_exponent() == 3
    _, delta_c = chart_series("c", k, l)
    assert delta_c.leading_exponent() == 2 and delta_c.coefficient(2) == -1


def test_incidence_is_5_3(rng):
    for k, l in ((F(3), F(7)), (F(-2), F(5, 3))):
        points, matrix = incidence_data(k, l)
        for i in range(5):
            assert {j for j in range(5) if matrix[i][j]} \
                == {(i - 1) % 5, i % 5, (i + 1) % 5}
        for j in range(5):
            assert sum(matrix[i][j] for i in range(5)) == 3


def test_chart_limits_examples():
    k, l = F(3), F(7)
    points = divisor_points(k)
    assert chart_limit(1, "a", k, l) == points[4]
    assert chart_limit(1, "b", k, l) == points[1]
    assert chart_limit(1, "c", k, l) == points[0]
    assert chart_limit(3, "c", k, l) == points[2]


# ---------------------------------------------------------------------------
# balance limits
# ---------------------------------------------------------------------------

def test_balance_limits_land_on_curves():
    k, beta, delta = F(3), F(2), F(1, 2)
    for shift in range(5):
        limit, _ = balance_limit(k, beta, delta, shift)
        expected = ProjectivePoint9(tuple(
            curve_coords(1 + shift, beta, delta, k, F(1))))
        assert limit == expected


def test_balance_params_constraint():
    k, beta, delta = F(3), F(2), F(1, 2)
    balance, params, l = principal_balance_params(k, beta, delta)
    assert balance.A == (1, 2)
    alpha, gamma = params["a2.1"], params["a3.2"]
    assert 2 * alpha + delta == k
    assert 2 * alpha * delta + beta - gamma == l
    assert gamma * beta * delta == -1
    with pytest.raises(InvariantError):
        principal_balance_params(k, F(0), delta)


def test_rotated_solution_still_solves(rng):
    from prymlab.painleve import km_residual
    balance, params, _ = principal_balance_params(F(3), F(2), F(1, 2))
    series = laurent_balance(5, balance, params, 8)
    rotated = rotate_solution(series, 2)
    for r in km_residual(rotated):
        assert r.is_zero_through(r.known_through())


def test_series_limit_degenerate_guards():
    from prymlab.example5 import series_limit
    all_unknown = [LaurentSeries(0, [], hi=-1) for _ in range(9)]
    with pytest.raises(InvariantError, match="all coordinates vanish"):
        series_limit(all_unknown)
    # one window ends before the leading exponent of another coordinate
    short = LaurentSeries(0, [], hi=-5)
    deep = LaurentSeries.monomial(-3, F(1), hi=0)
    with pytest.raises(InvariantError, match="window ends"):
        series_limit([short, deep] + [LaurentSeries.constant(F(1))] * 7)


def test_report_shape():
    report = example5_report(F(3), F(7), order=6)
    assert report["k"] == "3" and report["l"] == "7"
    assert len(report["points"]) == 5
    assert all(v["on_curve"] for v in report["balance_checks"]["verdicts"])
    assert sum(sum(row) for row in report["incidence"]) == 15


def test_spectral_invariants_constant_along_balance():
    k, beta, delta = F(3), F(2), F(1, 2)
    balance, params, l = principal_balance_params(k, beta, delta)
    series = laurent_balance(5, balance, params, 10)
    k_series = sum(series[1:], series[0])
    l_series = (series[0] * series[2] + series[1] * series[3]
                + series[2] * series[4] + series[3] * series[0]
                + series[4] * series[1])
    prod = series[0]
    for s in series[1:]:
        prod = prod * s
    for value, expected in ((k_series, k), (l_series, l), (prod, F(1))):
        for e in range(value.leading_exponent(), value.known_through() + 1):
            assert value.coefficient(e) == (expected if e == 0 else 0)

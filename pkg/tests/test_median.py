import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammamedian import (
    DomainError,
    median,
    median_bounds,
    median_derivative,
    median_second_derivative,
    phi_bundle,
)
from gammamedian.specfun import log_prefactor, reg_lower_gamma

import reference_values as ref

LN2 = math.log(2.0)


def test_closed_form_medians():
    assert median(1.0).m == pytest.approx(LN2, abs=1e-16)
    assert median(2.0).m == pytest.approx(ref.MEDIAN_TWO_BISECTION, abs=1e-15)


@pytest.mark.parametrize("x, expected", sorted(ref.MEDIAN.items()))
def test_median_matches_reference(x, expected):
    assert median(x).m == pytest.approx(expected, rel=4e-15)


def test_median_at_thousand_inside_bounds():
    lo, hi = median_bounds(1000.0)
    assert lo < median(1000.0).m < hi


@given(st.floats(min_value=1e-3, max_value=1e5))
@settings(max_examples=200, deadline=None)
def test_median_result_invariants(x):
    r = median(x)
    # one ulp of m moves P by ulp(m) * density; above x ~ 3e4 that exceeds 1e-14
    density = math.exp(log_prefactor(x, r.m)) / r.m
    assert abs(r.residual) <= max(1e-14, math.ulp(r.m) * density)
    if x <= 3e4:
        assert abs(r.residual) <= 1e-14
    assert r.bracket_high == x
    assert r.bracket_low == pytest.approx(x * 2.0 ** (-1.0 / x), rel=1e-12)
    if r.bracket_low > 0.0:
        assert r.bracket_low < r.m < r.bracket_high
    assert r.residual == reg_lower_gamma(x, r.m) - 0.5
    assert 1 <= r.iterations <= 100


def test_median_near_upper_limit_residual_is_rounding_level():
    r = median(1e6)
    density = math.exp(log_prefactor(1e6, r.m)) / r.m
    assert abs(r.residual) <= math.ulp(r.m) * density


def test_median_deterministic():
    assert median(3.7) == median(3.7)


@pytest.mark.parametrize("bad", [0.0, 9e-4, 1.1e6, math.nan, math.inf, -2.0])
def test_median_domain(bad):
    with pytest.raises(DomainError):
        median(bad)


def test_median_bounds_examples():
    assert median_bounds(1.0) == (pytest.approx(0.5, abs=1e-16), pytest.approx(0.7165313105737893, abs=1e-16))
    lo, hi = median_bounds(10.0)
    assert lo == pytest.approx(9.330329915368074, rel=1e-15)
    assert hi == pytest.approx(9.672161004820059, rel=1e-15)
    log_lo, _ = median_bounds(1e-3, log=True)
    assert log_lo == pytest.approx(math.log(1e-3) - 1000.0 * LN2, rel=1e-15)


@pytest.mark.parametrize("x, expected", sorted(ref.MEDIAN_PRIME.items()))
def test_median_derivative_matches_reference(x, expected):
    assert median_derivative(x) == pytest.approx(expected, rel=1e-12)


@given(st.floats(min_value=1e-2, max_value=1e3))
@settings(max_examples=60, deadline=None)
def test_median_derivative_in_unit_interval(x):
    assert 0.0 < median_derivative(x) < 1.0


def _richardson_slope(x):
    h = 1e-3 * x

    def d(step):
        return (median(x + step).m - median(x - step).m) / (2 * step)

    d0, d1, d2 = d(h), d(h / 2), d(h / 4)
    r1, r2 = (4 * d1 - d0) / 3, (4 * d2 - d1) / 3
    return (16 * r2 - r1) / 15


def test_median_derivative_at_one_matches_finite_differences():
    assert median_derivative(1.0) == pytest.approx(_richardson_slope(1.0), abs=1e-9)


def test_median_derivative_at_thousand_near_one():
    v = median_derivative(1000.0)
    assert abs(v - 1.0) < 1e-3
    assert v == pytest.approx(_richardson_slope(1000.0), abs=1e-6)


@pytest.mark.parametrize("x, expected", sorted(ref.MEDIAN_SECOND.items()))
def test_median_second_derivative_matches_reference(x, expected):
    assert median_second_derivative(x) == pytest.approx(expected, rel=1e-5)


def test_median_second_derivative_against_second_difference():
    x, h = 2.0, 1e-3

    def second(step):
        return (median(x + step).m - 2 * median(x).m + median(x - step).m) / step**2

    direct = (4 * second(h / 2) - second(h)) / 3
    assert median_second_derivative(x) == pytest.approx(direct, abs=1e-6)


def test_median_second_derivative_cross_module_identity():
    # m'' = -exp(-phi) ((x phi)'' - x phi'^2)
    x = 1.0
    pb = phi_bundle(x)
    implied = -math.exp(-pb.phi) * (pb.xphi_second - x * pb.phi_prime**2)
    assert median_second_derivative(x) == pytest.approx(implied, abs=1e-6)


@pytest.mark.parametrize("x", [0.012, 0.3, 1.0, 7.5, 80.0, 990.0])
def test_median_second_derivative_positive(x):
    assert median_second_derivative(x) > 0.0


def test_m_minus_x_decreasing_and_integer_convexity():
    xs = [10 ** (k / 20) for k in range(-40, 61)]
    gaps = [median(x).m - x for x in xs]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    ms = [median(float(n)).m for n in range(1, 53)]
    assert all(ms[i + 2] - 2 * ms[i + 1] + ms[i] > 0 for i in range(50))

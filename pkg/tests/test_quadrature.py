import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammamedian import ConvergenceError, DomainError, QuadratureResult
from gammamedian.quadrature import integrate_adaptive, integrate_de

ENGINES = [integrate_adaptive, integrate_de]


def test_adaptive_examples():
    r = integrate_adaptive(lambda t: math.exp(-t), 0.0, 1.0, 1e-12)
    assert r.value == pytest.approx(1.0 - math.exp(-1.0), abs=1e-12)
    assert integrate_adaptive(math.sin, 2.0, 2.0, 1e-12).value == 0.0
    assert integrate_adaptive(lambda t: t * t, 0.0, 1.0, 1e-12).value == pytest.approx(1.0 / 3.0, abs=1e-15)


def test_de_examples():
    cases = [
        (lambda t: 1.0 / math.sqrt(t), 2.0),
        (math.log, -1.0),
        (lambda t: math.exp(-t) / math.sqrt(t), 1.4936482656248540),
    ]
    for f, exact in cases:
        r = integrate_de(f, 0.0, 1.0, 1e-10)
        assert r.value == pytest.approx(exact, abs=1e-10)
        assert abs(r.value - exact) <= max(1e-10, r.error_estimate)


@pytest.mark.parametrize("engine", ENGINES)
def test_error_estimate_bounds_true_error(engine):
    for f, a, b, exact in [
        (math.exp, 0.0, 1.0, math.e - 1.0),
        (math.cos, 0.0, 3.0, math.sin(3.0)),
        (lambda t: 1.0 / (1.0 + t * t), -2.0, 5.0, math.atan(5.0) + math.atan(2.0)),
    ]:
        r = engine(f, a, b, 1e-12)
        assert abs(r.value - exact) <= max(1e-12, r.error_estimate)


@pytest.mark.parametrize("engine", ENGINES)
def test_reversed_limits_negate(engine):
    fwd = engine(math.exp, 0.0, 2.0, 1e-12).value
    assert engine(math.exp, 2.0, 0.0, 1e-12).value == pytest.approx(-fwd, abs=1e-15)


coeff = st.floats(min_value=-5.0, max_value=5.0)


@pytest.mark.parametrize("engine", ENGINES)
@given(coeff, coeff, st.floats(min_value=0.1, max_value=3.0))
@settings(max_examples=40, deadline=None)
def test_linearity(engine, alpha, beta, k):
    tol = 1e-12

    def f(t):
        return math.exp(-k * t)

    def g(t):
        return math.sin(k * t)

    combined = engine(lambda t: alpha * f(t) + beta * g(t), 0.0, 2.0, tol).value
    parts = alpha * engine(f, 0.0, 2.0, tol).value + beta * engine(g, 0.0, 2.0, tol).value
    assert combined == pytest.approx(parts, abs=10 * tol)


@pytest.mark.parametrize("engine", ENGINES)
@given(st.floats(min_value=0.0, max_value=3.0), st.floats(min_value=0.01, max_value=0.99))
@settings(max_examples=40, deadline=None)
def test_interval_additivity(engine, a, frac):
    tol = 1e-12
    b = a + 2.0
    c = a + 2.0 * frac
    f = math.cosh
    whole = engine(f, a, b, tol).value
    split = engine(f, a, c, tol).value + engine(f, c, b, tol).value
    assert whole == pytest.approx(split, abs=10 * tol * max(1.0, abs(whole)))


def test_deterministic():
    f = lambda t: math.exp(-t) * math.log1p(t)
    assert integrate_adaptive(f, 0.0, 7.0, 1e-13) == integrate_adaptive(f, 0.0, 7.0, 1e-13)
    assert integrate_de(f, 0.0, 7.0, 1e-13) == integrate_de(f, 0.0, 7.0, 1e-13)


def test_adaptive_subdivision_limit_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        integrate_adaptive(lambda t: 1.0 / t if t else math.inf, 0.0, 1.0, 1e-12)
    assert info.value.estimate is not None
    assert "error_estimate" in info.value.details


def test_de_level_cap_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        integrate_de(lambda t: 1.0 / t, 0.0, 1.0, 1e-12)
    assert info.value.estimate is not None


@pytest.mark.parametrize("engine", ENGINES)
def test_domain_errors(engine):
    with pytest.raises(DomainError):
        engine(math.exp, 0.0, math.inf, 1e-12)
    with pytest.raises(DomainError):
        engine(math.exp, 0.0, 1.0, 0.0)


def test_result_invariants():
    with pytest.raises(ValueError):
        QuadratureResult(1.0, -1.0, 3)
    with pytest.raises(ValueError):
        QuadratureResult(1.0, 0.0, 0)

"""Auxiliary functions of the convexity argument for the gamma median.

With ``phi(x) = log(x / m(x))`` the derivative of ``x*phi`` factors as

    (x phi)' = -exp(g) * (A + B),
    g(x) = x (phi - 1 + exp(-phi)),
    A(x) = int_0^{x phi} exp(-s) exp(x (1 - exp(-s/x))) (1 - (1 + s/x) exp(-s/x)) ds,

and ``B`` is whatever remains. ``B`` is therefore *defined* here through
that identity; its integral representation is not evaluated. Second
derivatives ((x phi)'' and B') come from Richardson-extrapolated central
differences on the same stencil as m''.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._numdiff import checked_step, richardson_derivative
from .errors import DomainError
from .median import MAX_X, MIN_X, _median_and_slope
from .quadrature import integrate_adaptive

__all__ = [
    "GABValues",
    "PhiBundle",
    "A_prime",
    "A_prime_terms",
    "A_value",
    "B_prime",
    "B_value",
    "evaluate",
    "g_prime",
    "g_value",
    "gab_values",
    "h1",
    "h2",
    "phi_bundle",
    "point_summary",
    "SUMMARY_FIELDS",
]

_EPS = 2.220446049250313e-16
_QUAD_RTOL = 1e-15
_TINY = 1e-300
_SERIES_CUTOFF = 0.5


@dataclass(frozen=True)
class PhiBundle:
    x: float
    phi: float
    phi_prime: float
    xphi: float
    xphi_prime: float
    xphi_second: float


@dataclass(frozen=True)
class GABValues:
    x: float
    g: float
    g_prime: float
    A: float
    A_prime: float
    B: float
    B_prime: float


# -- cancellation-free kernels ------------------------------------------------

def _exp_remainder(a):
    """exp(-a) - 1 + a."""
    if abs(a) >= _SERIES_CUTOFF:
        return math.expm1(-a) + a
    term = a * a / 2.0
    total = term
    k = 2
    while abs(term) > _EPS * total:
        k += 1
        term *= -a / k
        total += term
    return total


def _one_minus_exp(a):
    """1 - exp(-a)."""
    return -math.expm1(-a)


def _bracket_kernel(a):
    """1 - (1 + a) exp(-a), starting as a**2/2 - a**3/3 + a**4/8."""
    if abs(a) >= _SERIES_CUTOFF:
        return -math.expm1(-a) - a * math.exp(-a)
    # sum_{k>=2} (-1)^k (k-1) a^k / k!
    power = a * a / 2.0  # a^k / k! at k = 2
    total = power
    k = 2
    while True:
        k += 1
        power *= -a / k
        inc = (k - 1) * power
        total += inc
        if abs(inc) <= _EPS * total:
            return total


def _a_weight(s, x):
    """exp(-s) * exp(x (1 - exp(-s/x))) = exp(-x * (exp(-a) - 1 + a))."""
    return math.exp(-x * _exp_remainder(s / x))


# -- pointwise state ------------------------------------------------------------

class _Point:
    """First-order quantities at one abscissa."""

    __slots__ = ("x", "m", "m_prime", "phi", "phi_prime", "xphi", "xphi_prime", "neg_x_phi_prime")

    def __init__(self, x):
        m, m_prime = _median_and_slope(x)
        self.x = x
        self.m = m
        self.m_prime = m_prime
        if m > 0.5 * x:
            # m - x is exact here
            self.phi = -math.log1p((m - x) / x)
        else:
            self.phi = math.log(x) - math.log(m)
        ratio = x * m_prime / m
        self.neg_x_phi_prime = ratio - 1.0
        self.phi_prime = -self.neg_x_phi_prime / x
        self.xphi = x * self.phi
        self.xphi_prime = self.phi - self.neg_x_phi_prime


class _Tower:
    """Memoised evaluation of every derived quantity around one ``x``."""

    def __init__(self, x):
        if not (isinstance(x, (int, float)) and math.isfinite(x) and MIN_X <= x <= MAX_X):
            raise DomainError(f"x must lie in [{MIN_X}, {MAX_X}], got {x!r}")
        self.x = float(x)
        self._points = {}
        self._a = {}

    def point(self, y):
        p = self._points.get(y)
        if p is None:
            p = self._points[y] = _Point(y)
        return p

    def A(self, y):
        v = self._a.get(y)
        if v is None:
            p = self.point(y)
            v = self._a[y] = _integrate_a(y, p.xphi, integrate_adaptive)
        return v

    def g(self, y):
        p = self.point(y)
        return y * _exp_remainder(p.phi)

    def neg_g_prime(self, y):
        p = self.point(y)
        # -g' = -(phi - 1 + e^-phi) - x phi' (1 - e^-phi)
        return -_exp_remainder(p.phi) + p.neg_x_phi_prime * _one_minus_exp(p.phi)

    def B(self, y):
        p = self.point(y)
        return -p.xphi_prime * math.exp(-self.g(y)) - self.A(y)

    def step(self):
        return checked_step(self.x)

    def xphi_second(self):
        return richardson_derivative(lambda y: self.point(y).xphi_prime, self.x, self.step())

    def m_second(self):
        return richardson_derivative(lambda y: self.point(y).m_prime, self.x, self.step())

    def B_prime(self):
        return richardson_derivative(self.B, self.x, self.step())

    def phi_bundle(self):
        p = self.point(self.x)
        return PhiBundle(
            x=self.x,
            phi=p.phi,
            phi_prime=p.phi_prime,
            xphi=p.xphi,
            xphi_prime=p.xphi_prime,
            xphi_second=self.xphi_second(),
        )

    def neg_A_prime(self, engine=integrate_adaptive):
        return sum(A_prime_terms(self.x, engine=engine, _point=self.point(self.x)))

    def gab_values(self):
        x = self.x
        return GABValues(
            x=x,
            g=self.g(x),
            g_prime=-self.neg_g_prime(x),
            A=self.A(x),
            A_prime=-self.neg_A_prime(),
            B=self.B(x),
            B_prime=self.B_prime(),
        )


def _quad(engine, f, a, b):
    return engine(f, a, b, tol=_TINY, rtol=_QUAD_RTOL).value


def _integrate_a(x, upper, engine):
    def integrand(s):
        return _a_weight(s, x) * _bracket_kernel(s / x)

    return _quad(engine, integrand, 0.0, upper)


# -- public operations -----------------------------------------------------------

def evaluate(x: float) -> tuple[PhiBundle, GABValues]:
    """Both bundles at ``x``, sharing one set of median evaluations."""
    tower = _Tower(x)
    return tower.phi_bundle(), tower.gab_values()


SUMMARY_FIELDS = ("x", "m", "m_prime", "m_second", "phi", "xphi", "xphi_prime", "g", "A", "B")


def point_summary(x: float) -> dict[str, float]:
    """The quantities of :data:`SUMMARY_FIELDS` at ``x``, in that order."""
    tower = _Tower(x)
    x = tower.x
    p = tower.point(x)
    return {
        "x": x,
        "m": p.m,
        "m_prime": p.m_prime,
        "m_second": tower.m_second(),
        "phi": p.phi,
        "xphi": p.xphi,
        "xphi_prime": p.xphi_prime,
        "g": tower.g(x),
        "A": tower.A(x),
        "B": tower.B(x),
    }


def phi_bundle(x: float) -> PhiBundle:
    """phi, phi', x*phi and its first two derivatives at ``x``."""
    return _Tower(x).phi_bundle()


def gab_values(x: float) -> GABValues:
    return _Tower(x).gab_values()


def g_value(x: float) -> float:
    """g(x) = x (phi - 1 + exp(-phi))."""
    tower = _Tower(x)
    return tower.g(tower.x)


def g_prime(x: float) -> float:
    """g'(x) = phi - 1 + exp(-phi) + x phi' (1 - exp(-phi))."""
    tower = _Tower(x)
    return -tower.neg_g_prime(tower.x)


def A_value(x: float, engine=integrate_adaptive) -> float:
    """A(x) by quadrature over ``[0, x*phi(x)]``.

    ``engine`` selects the integrator (Gauss-Kronrod by default,
    :func:`~gammamedian.quadrature.integrate_de` as an alternative).
    """
    tower = _Tower(x)
    return _integrate_a(tower.x, tower.point(tower.x).xphi, engine)


def A_prime_terms(x: float, engine=integrate_adaptive, _point=None) -> tuple[float, float, float]:
    """The three terms whose sum is ``-A'(x)``.

    Returns ``(boundary, -squared_integral, power_integral)`` where

    * boundary = -(phi + x phi') exp(-x phi) exp(x (1 - exp(-phi))) (1 - (1 + phi) exp(-phi)),
    * squared_integral = int_0^{x phi} E(s) (1 - (1 + s/x) exp(-s/x))**2 ds,
    * power_integral = int_0^{x phi} E(s) s**2 exp(-s/x) / x**3 ds,

    with ``E(s) = exp(-s) exp(x (1 - exp(-s/x)))``.
    """
    if _point is None:
        tower = _Tower(x)
        _point = tower.point(tower.x)
    p = _point
    x = p.x
    boundary = -p.xphi_prime * _a_weight(p.xphi, x) * _bracket_kernel(p.phi)

    def squared(s):
        k = _bracket_kernel(s / x)
        return _a_weight(s, x) * k * k

    def power(s):
        a = s / x
        return _a_weight(s, x) * a * a * math.exp(-a) / x

    return (
        boundary,
        -_quad(engine, squared, 0.0, p.xphi),
        _quad(engine, power, 0.0, p.xphi),
    )


def A_prime(x: float) -> float:
    """A'(x) from its exact expression (boundary term plus two integrals)."""
    return -_Tower(x).neg_A_prime()


def B_value(x: float) -> float:
    """B(x) = -(x phi)'(x) exp(-g(x)) - A(x)."""
    tower = _Tower(x)
    return tower.B(tower.x)


def B_prime(x: float) -> float:
    """B'(x) by Richardson-extrapolated central differences of B."""
    return _Tower(x).B_prime()


def _check_t(t):
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"t must be a finite positive number, got {t!r}")


def h1(t: float) -> float:
    """exp(t) (t**3/6 + 4/135 + 8/(135 t**2) + t/3); bounds the x >= 1 case."""
    _check_t(t)
    return math.exp(t) * (t**3 / 6.0 + 4.0 / 135.0 + 8.0 / (135.0 * t * t) + t / 3.0)


def h2(t: float) -> float:
    """exp(t) (t**2/6 + 4/(135 t) + 8/(135 t**2) + t/3); bounds the x < 1 case."""
    _check_t(t)
    return math.exp(t) * (t * t / 6.0 + 4.0 / (135.0 * t) + 8.0 / (135.0 * t * t) + t / 3.0)

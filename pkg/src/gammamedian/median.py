"""The median m(x) of the gamma(x) distribution and its derivatives.

``m(x)`` is the unique root of ``P(x, m) = 1/2``. Since ``x * log(x/m(x))``
decreases from ``log 2`` to ``1/3``, the root always lies in
``(x * 2**(-1/x), x * exp(-1/(3x)))``, which brackets the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._numdiff import checked_step, richardson_derivative
from .errors import ConvergenceError, DomainError
from .specfun import log_prefactor, reg_lower_gamma, reg_lower_gamma_dx

__all__ = [
    "MIN_X",
    "MAX_X",
    "MedianResult",
    "median",
    "median_bounds",
    "median_derivative",
    "median_second_derivative",
]

MIN_X = 1e-3
MAX_X = 1e6
_LOG2 = math.log(2.0)
_MAX_ITER = 100
_RESIDUAL_TOL = 1e-15
_POLISH_ULPS = 4


@dataclass(frozen=True)
class MedianResult:
    x: float
    m: float
    residual: float
    iterations: int
    bracket_low: float
    bracket_high: float


def _check_domain(x):
    if not (isinstance(x, (int, float)) and math.isfinite(x) and MIN_X <= x <= MAX_X):
        raise DomainError(f"x must lie in [{MIN_X}, {MAX_X}], got {x!r}")


def median_bounds(x: float, log: bool = False) -> tuple[float, float]:
    """Bounds ``(x * 2**(-1/x), x * exp(-1/(3x)))`` on the median.

    With ``log=True`` the natural logarithms of the bounds are returned,
    which stay representable when the lower bound itself underflows.
    """
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be a finite positive number, got {x!r}")
    log_lo = math.log(x) - _LOG2 / x
    log_hi = math.log(x) - 1.0 / (3.0 * x)
    if log:
        return log_lo, log_hi
    return math.exp(log_lo), math.exp(log_hi)


def _solve(x):
    """Safeguarded Newton iteration in log m; no domain check.

    The Newton step is taken for u = log m, where P is well scaled for
    every shape, but applied to m multiplicatively so that steps below the
    resolution of u are not lost at large x.
    """
    log_lo, log_up = median_bounds(x, log=True)
    bracket_low = math.exp(log_lo)
    bracket_high = x
    lo, hi = bracket_low, bracket_high
    m = math.exp(log_up)  # initial guess x * exp(-1/(3x)), inside the bracket
    iterations = 0
    converged = False
    while iterations < _MAX_ITER:
        iterations += 1
        r = reg_lower_gamma(x, m) - 0.5
        if abs(r) <= _RESIDUAL_TOL:
            converged = True
            break
        if r < 0.0:
            lo = m
        else:
            hi = m
        # dP/du = m * density(m) = exp(x ln m - m - ln Gamma(x))
        slope = math.exp(log_prefactor(x, m))
        m_new = m + m * math.expm1(-r / slope) if slope > 0.0 else math.nan
        if lo <= m_new <= hi and abs(m_new - m) <= 4.0 * math.ulp(m):
            m = m_new
            converged = True
            break
        if not lo < m_new < hi:
            if hi > 2.0 * lo:
                m_new = math.exp(0.5 * (math.log(lo) + math.log(hi)))
            else:
                m_new = 0.5 * (lo + hi)
        step = abs(m_new - m)
        m = m_new
        if step <= 4.0 * math.ulp(m):
            converged = True
            break
    if converged:
        m, r = _polish(x, m)
    if not converged or not bracket_low < m < bracket_high:
        result = MedianResult(x, m, reg_lower_gamma(x, m) - 0.5, iterations, bracket_low, bracket_high)
        raise ConvergenceError(
            f"median solver failed at x={x!r}", estimate=m, result=result
        )
    return MedianResult(x, m, r, iterations, bracket_low, bracket_high)


def _polish(x, m):
    """Walk to the neighbouring double with the smallest residual."""
    r = reg_lower_gamma(x, m) - 0.5
    direction = math.inf if r < 0.0 else -math.inf
    for _ in range(_POLISH_ULPS):
        m_next = math.nextafter(m, direction)
        r_next = reg_lower_gamma(x, m_next) - 0.5
        if abs(r_next) >= abs(r):
            break
        m, r = m_next, r_next
    return m, r


def median(x: float) -> MedianResult:
    """Median of the gamma distribution with shape ``x`` (unit scale).

    Solves ``P(x, m) = 1/2`` for ``x`` in ``[1e-3, 1e6]``.

    Raises:
        DomainError: ``x`` outside the supported range.
        ConvergenceError: the iteration cap was reached; ``details['result']``
            holds the last iterate as a :class:`MedianResult`.
    """
    _check_domain(x)
    return _solve(float(x))


def _median_and_slope(x):
    """(m, m') at x by implicit differentiation; no domain check."""
    m = _solve(x).m
    # m' = -P_x / P_m, with P_m = exp(log_prefactor) / m
    dpdx = reg_lower_gamma_dx(x, m)
    return m, -dpdx * m * math.exp(-log_prefactor(x, m))


def median_derivative(x: float) -> float:
    """m'(x) = -(dP/dx) / (dP/dm) at ``(x, m(x))``; lies in (0, 1)."""
    _check_domain(x)
    return _median_and_slope(float(x))[1]


def median_second_derivative(x: float) -> float:
    """m''(x) from Richardson-extrapolated central differences of m'.

    Raises:
        StepUnderflowError: no difference stencil fits around ``x``.
    """
    _check_domain(x)
    x = float(x)
    h = checked_step(x)
    return richardson_derivative(lambda y: _median_and_slope(y)[1], x, h)

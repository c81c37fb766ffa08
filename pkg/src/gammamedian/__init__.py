"""Median of the gamma distribution, its derivatives, and convexity checks."""

from .errors import ConvergenceError, DomainError, StepUnderflowError
from .median import (
    MedianResult,
    median,
    median_bounds,
    median_derivative,
    median_second_derivative,
)
from .paperfun import (
    GABValues,
    PhiBundle,
    A_prime,
    A_value,
    B_prime,
    B_value,
    g_prime,
    g_value,
    gab_values,
    h1,
    h2,
    phi_bundle,
)
from .quadrature import QuadratureResult, integrate_adaptive, integrate_de
from .specfun import digamma, log_gamma, reg_lower_gamma, reg_lower_gamma_dx
from .verify import CHECK_IDS, GridSpec, VerificationRecord, run_checks, scan_max

__version__ = "0.1.0"

__all__ = [
    "CHECK_IDS",
    "A_prime",
    "A_value",
    "B_prime",
    "B_value",
    "ConvergenceError",
    "DomainError",
    "GABValues",
    "GridSpec",
    "MedianResult",
    "PhiBundle",
    "QuadratureResult",
    "StepUnderflowError",
    "VerificationRecord",
    "digamma",
    "g_prime",
    "g_value",
    "gab_values",
    "h1",
    "h2",
    "integrate_adaptive",
    "integrate_de",
    "log_gamma",
    "median",
    "median_bounds",
    "median_derivative",
    "median_second_derivative",
    "phi_bundle",
    "reg_lower_gamma",
    "reg_lower_gamma_dx",
    "run_checks",
    "scan_max",
]

"""Exception types raised by the numerical routines."""


class DomainError(ValueError):
    """Argument outside the supported domain of a function."""


class StepUnderflowError(DomainError):
    """A finite-difference stencil cannot be formed inside the domain."""


class ConvergenceError(ArithmeticError):
    """An iterative method stopped before meeting its tolerance.

    ``estimate`` holds the best value reached and ``details`` any solver
    diagnostics (error estimate, iteration count, partial result object).
    """

    def __init__(self, message, estimate=None, **details):
        super().__init__(message)
        self.estimate = estimate
        self.details = details

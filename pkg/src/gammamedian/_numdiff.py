"""Central differences with Richardson extrapolation."""

from __future__ import annotations

from .errors import StepUnderflowError


def fd_step(x):
    """Base step for differentiating the median family at ``x``.

    Proportional to ``x`` for ``x >= 0.2``; below that it shrinks like
    ``x**2``, the scale on which ``m(x) ~ 2**(-1/x)`` varies.
    """
    return 1e-2 * x * min(1.0, 5.0 * x)


def checked_step(x):
    h = fd_step(x)
    if not (x - h > 0.0 and x + 0.25 * h != x):
        raise StepUnderflowError(f"cannot form a difference stencil at x={x!r}")
    return h


def richardson_derivative(f, x, h):
    """f'(x) from central differences at steps h, h/2, h/4.

    Two Richardson levels cancel the h**2 and h**4 error terms. ``f`` is
    called at the six points ``x +- h/2**k``, in a fixed order.
    """
    d = []
    for k in range(3):
        s = h / 2**k
        d.append((f(x + s) - f(x - s)) / (2.0 * s))
    r1 = (4.0 * d[1] - d[0]) / 3.0
    r2 = (4.0 * d[2] - d[1]) / 3.0
    return (16.0 * r2 - r1) / 15.0

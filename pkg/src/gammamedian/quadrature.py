"""One-dimensional integration engines.

Two rules are provided:

* :func:`integrate_adaptive` -- globally bisecting Gauss-Kronrod (7, 15),
  for smooth integrands on a finite interval.
* :func:`integrate_de` -- tanh-sinh (double exponential) rule, for
  integrands with integrable singularities at one or both endpoints.

Both are deterministic: node tables are fixed and panels are processed in a
fixed order, so repeated calls return bit-identical results.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import ConvergenceError, DomainError

__all__ = ["QuadratureResult", "integrate_adaptive", "integrate_de"]

_EPS = 2.220446049250313e-16

# Gauss-Kronrod 15-point abscissae (non-negative half) and weights; the
# embedded Gauss 7-point rule uses the odd-indexed Kronrod abscissae.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_GK_MAX_DEPTH = 50
_GK_MAX_PANELS = 2000
_DE_MAX_LEVEL = 12
_DE_MIN_LEVEL = 3
# Nodes are kept while their distance to the nearest endpoint (on [-1, 1])
# stays above this; the corresponding t is about 6.78.
_DE_MIN_GAP = 1e-300


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with its error estimate and integrand call count."""

    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if not self.error_estimate >= 0.0:
            raise ValueError("error_estimate must be non-negative")
        if self.evaluations < 1:
            raise ValueError("evaluations must be at least 1")


def _check_interval(a, b):
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration limits must be finite, got [{a}, {b}]")


def _gk15(f, a, b):
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(centre)
    kronrod = fc * _WGK[7]
    gauss = fc * _WG[3]
    resabs = abs(kronrod)
    for j in range(7):
        dx = half * _XGK[j]
        f1 = f(centre - dx)
        f2 = f(centre + dx)
        kronrod += _WGK[j] * (f1 + f2)
        resabs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            gauss += _WG[j // 2] * (f1 + f2)
    kronrod *= half
    gauss *= half
    resabs *= abs(half)
    return kronrod, abs(kronrod - gauss), resabs


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    rtol: float = 0.0,
) -> QuadratureResult:
    """Integrate a smooth ``f`` over ``[a, b]`` by adaptive Gauss-Kronrod.

    Globally adaptive: the panel with the largest ``|K15 - G7|`` is bisected
    until the summed error meets ``max(tol, rtol * |I|)`` or the rounding
    floor. Ties are broken by creation order, so the subdivision sequence is
    deterministic. Panels are never split beyond depth 50, and at most 2000
    bisections are made.

    Raises:
        ConvergenceError: a subdivision limit was hit first;
            ``estimate`` carries the best available value and
            ``details['error_estimate']`` the summed error.
    """
    _check_interval(a, b)
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 1)
    if a > b:
        r = integrate_adaptive(f, b, a, tol, rtol)
        return QuadratureResult(-r.value, r.error_estimate, r.evaluations)

    value, err, resabs = _gk15(f, a, b)
    evaluations = 15
    # heap entries: (-error, sequence, lo, hi, value, error, resabs, depth)
    heap = [(-err, 0, a, b, value, err, resabs, 0)]
    frozen = []
    exhausted = True
    for seq in range(1, 2 * _GK_MAX_PANELS, 2):
        if err <= max(tol, rtol * abs(value)) or err <= 50.0 * _EPS * resabs:
            exhausted = False
            break
        if not heap:
            break
        _, _, lo, hi, v0, e0, r0, depth = heapq.heappop(heap)
        value -= v0
        err -= e0
        resabs -= r0
        mid = 0.5 * (lo + hi)
        for k, (p, q) in enumerate(((lo, mid), (mid, hi))):
            v, e, r = _gk15(f, p, q)
            evaluations += 15
            value += v
            err += e
            resabs += r
            entry = (-e, seq + k, p, q, v, e, r, depth + 1)
            if depth + 1 >= _GK_MAX_DEPTH or mid in (lo, hi):
                frozen.append(entry)
            else:
                heapq.heappush(heap, entry)
    panels = heap + frozen
    value = math.fsum(p[4] for p in panels)
    err = math.fsum(p[5] for p in panels)
    if exhausted:
        raise ConvergenceError(
            "adaptive Gauss-Kronrod hit the subdivision limit",
            estimate=value,
            error_estimate=err,
            evaluations=evaluations,
        )
    return QuadratureResult(value, err, evaluations)


@lru_cache(maxsize=None)
def _de_nodes(level):
    """Nodes added at ``level`` as ``(t, gap, weight)`` with t >= 0.

    ``gap`` is ``1 - tanh(pi/2 sinh t)``, computed without cancellation;
    weights include the step ``h = 2**-level``.
    """
    h = 2.0 ** -level
    if level == 0:
        ks = range(0, 10**6)
    else:
        ks = range(1, 10**6, 2)
    nodes = []
    for k in ks:
        t = k * h
        s = 0.5 * math.pi * math.sinh(t)
        q = math.exp(-2.0 * s)
        gap = 2.0 * q / (1.0 + q)
        if gap < _DE_MIN_GAP:
            break
        weight = h * 0.5 * math.pi * math.cosh(t) * 4.0 * q / (1.0 + q) ** 2
        nodes.append((t, gap, weight))
    return tuple(nodes)


def _de_level_sum(f, a, b, half, level):
    total = 0.0
    total_abs = 0.0
    count = 0
    for t, gap, weight in _de_nodes(level):
        offset = half * gap
        if t == 0.0:
            v = f(a + half)
            total += weight * v
            total_abs += weight * abs(v)
            count += 1
            continue
        for u in (a + offset, b - offset):
            if u <= a or u >= b:
                continue
            v = f(u)
            total += weight * v
            total_abs += weight * abs(v)
            count += 1
    return total, total_abs, count


def integrate_de(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    rtol: float = 0.0,
) -> QuadratureResult:
    """Integrate ``f`` over ``(a, b)`` by the tanh-sinh rule.

    The endpoints themselves are never evaluated, and abscissae close to an
    endpoint are formed as ``a + gap`` / ``b - gap`` so that integrable
    singularities there are sampled accurately. The step is halved level by
    level (at most 12 levels) until the error estimate, extrapolated from
    the last three level sums, meets ``max(tol, rtol * |I|)`` or the
    rounding floor.

    Raises:
        ConvergenceError: the level cap was reached first; the exception
            carries the last estimate and its error estimate.
    """
    _check_interval(a, b)
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 1)
    if a > b:
        r = integrate_de(f, b, a, tol, rtol)
        return QuadratureResult(-r.value, r.error_estimate, r.evaluations)

    half = 0.5 * (b - a)
    raw = 0.0
    raw_abs = 0.0
    evaluations = 0
    history = []
    err = math.inf
    for level in range(_DE_MAX_LEVEL + 1):
        s, s_abs, n = _de_level_sum(f, a, b, half, level)
        evaluations += n
        # Sums at level l use step 2**-l; earlier weights carry larger steps.
        raw = 0.5 * raw + s if level else s
        raw_abs = 0.5 * raw_abs + s_abs if level else s_abs
        estimate = half * raw
        history.append(estimate)
        floor = 16.0 * _EPS * half * raw_abs
        if level < 2:
            continue
        d1 = abs(history[-1] - history[-2])
        d2 = abs(history[-1] - history[-3])
        if d1 == 0.0:
            err = 0.0
        elif d1 >= d2 or d2 >= 1.0:
            # extrapolation needs 0 < d1 < d2 < 1
            err = d1
        else:
            l1 = math.log10(d1)
            l2 = math.log10(d2)
            err = max(10.0 ** (l1 * l1 / l2), d1 * d1)
        err = max(err, floor)
        if level >= _DE_MIN_LEVEL and (err <= max(tol, rtol * abs(estimate)) or err <= floor):
            return QuadratureResult(estimate, err, max(evaluations, 1))
    raise ConvergenceError(
        "tanh-sinh rule did not converge within the level cap",
        estimate=history[-1],
        error_estimate=err,
        evaluations=evaluations,
    )

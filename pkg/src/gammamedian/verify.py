"""Grid verification of the inequalities around the gamma median.

Each grid point yields one :class:`VerificationRecord` per entry of
:data:`CHECK_IDS`. A record states ``lhs < rhs``; its margin is
``rhs - lhs``. A range check ``lo < v < hi`` is recorded as
``max(lo - v, v - hi) < 0``, so its margin is the distance to the nearer
end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .median import MAX_X, MIN_X
from .paperfun import _Tower, h1, h2

__all__ = ["CHECK_IDS", "FD_CHECKS", "GridSpec", "VerificationRecord", "run_checks", "scan_max"]

CHECK_IDS = (
    "xphi_in_range",
    "xphi_decreasing",
    "phi_decreasing",
    "phi_lt_neg_xphiprime",
    "mprime_in_01",
    "msecond_positive",
    "g_lt_xphi",
    "negGprime_lt_negXphiprimePhi",
    "negGprime_lt_negXphiprime",
    "A_lt_xphi3_over6",
    "negAprime_bound",
    "B_positive",
    "B_upper_bound",
    "negBprime_bound",
    "key_ineq_xphi2nd_lt_xphiprime2",
    "cube_bound",
)

# Checks resting on finite differences; these pass when margin > -tol.
FD_CHECKS = frozenset({"msecond_positive", "key_ineq_xphi2nd_lt_xphiprime2"})

_LN2 = math.log(2.0)
_SPACINGS = {"linear": "linear", "log": "log", "logarithmic": "log"}


@dataclass(frozen=True)
class GridSpec:
    """``count`` points from ``start`` to ``stop`` inclusive."""

    start: float = 1e-2
    stop: float = 1e3
    count: int = 200
    spacing: str = "log"

    def __post_init__(self):
        if self.spacing not in _SPACINGS:
            raise DomainError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        object.__setattr__(self, "spacing", _SPACINGS[self.spacing])
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 2:
            raise DomainError(f"count must be an integer >= 2, got {self.count!r}")
        start, stop = float(self.start), float(self.stop)
        if not (math.isfinite(start) and math.isfinite(stop)):
            raise DomainError("grid limits must be finite")
        if start < MIN_X or stop > MAX_X:
            raise DomainError(f"grid must lie inside [{MIN_X}, {MAX_X}], got [{start}, {stop}]")
        if not start < stop:
            raise DomainError(f"grid start must be below stop, got [{start}, {stop}]")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "stop", stop)

    def points(self) -> list[float]:
        n = self.count - 1
        if self.spacing == "linear":
            width = self.stop - self.start
            inner = [self.start + width * i / n for i in range(1, n)]
        else:
            lo, hi = math.log(self.start), math.log(self.stop)
            inner = [math.exp(lo + (hi - lo) * i / n) for i in range(1, n)]
        return [self.start, *inner, self.stop]


@dataclass(frozen=True)
class VerificationRecord:
    x: float
    check_id: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    note: str = ""


def _record(x, check_id, lhs, rhs, tol):
    margin = rhs - lhs
    threshold = -tol if check_id in FD_CHECKS else 0.0
    # NaN margins fail
    return VerificationRecord(x, check_id, lhs, rhs, margin, bool(margin > threshold))


def _failed(x, check_id, note):
    nan = math.nan
    return VerificationRecord(x, check_id, nan, nan, nan, False, note)


def _evaluate_point(x):
    try:
        tower = _Tower(x)
        bundles = (tower.phi_bundle(), tower.gab_values(), tower.point(x).m_prime, tower.m_second())
        return bundles, None
    except (ArithmeticError, ValueError) as exc:
        return None, f"{type(exc).__name__}: {exc}"


def _point_records(x, bundles, neighbour, tol):
    """Records at ``x``; ``neighbour`` gives the consecutive-point comparison.

    ``neighbour`` is ``(lower_x_bundle, upper_x_bundle)``: the pair whose
    values must decrease from the first to the second.
    """
    pb, gv, m_prime, m_second = bundles
    phi, xphi = pb.phi, pb.xphi
    neg_xphi_p = -x * pb.phi_prime
    out = []

    def add(check_id, lhs, rhs):
        out.append(_record(x, check_id, lhs, rhs, tol))

    add("xphi_in_range", max(1.0 / 3.0 - xphi, xphi - _LN2), 0.0)
    if neighbour is None:
        out.append(_failed(x, "xphi_decreasing", "neighbouring grid point unavailable"))
        out.append(_failed(x, "phi_decreasing", "neighbouring grid point unavailable"))
    else:
        left, right = neighbour
        add("xphi_decreasing", right.xphi, left.xphi)
        add("phi_decreasing", right.phi, left.phi)
    add("phi_lt_neg_xphiprime", phi, neg_xphi_p)
    add("mprime_in_01", max(-m_prime, m_prime - 1.0), 0.0)
    add("msecond_positive", 0.0, m_second)
    add("g_lt_xphi", gv.g, xphi)
    add("negGprime_lt_negXphiprimePhi", -gv.g_prime, neg_xphi_p * phi)
    add("negGprime_lt_negXphiprime", -gv.g_prime, neg_xphi_p)
    add("A_lt_xphi3_over6", gv.A, x * phi**3 / 6.0)
    add("negAprime_bound", -gv.A_prime, -(phi**3) / 6.0 + neg_xphi_p * phi * phi / 2.0)
    add("B_positive", 0.0, gv.B)
    add("B_upper_bound", gv.B, 4.0 / (135.0 * x * x))
    add("negBprime_bound", -gv.B_prime, 8.0 / (135.0 * x**3))
    add("key_ineq_xphi2nd_lt_xphiprime2", pb.xphi_second, x * pb.phi_prime**2)
    add("cube_bound", xphi**3, 48.0 / 135.0)
    return out


def run_checks(grid: GridSpec | None = None, tol: float = 1e-10) -> list[VerificationRecord]:
    """Evaluate every registered check at every grid point.

    Failures to evaluate a point become failed records carrying the error
    message; the sweep always completes. Records are sorted by
    ``(x, check_id)``.
    """
    if grid is None:
        grid = GridSpec()
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tol must be a positive number, got {tol!r}")
    xs = grid.points()
    results = [_evaluate_point(x) for x in xs]
    records = []
    for i, (x, (bundles, error)) in enumerate(zip(xs, results)):
        if bundles is None:
            records.extend(_failed(x, cid, error) for cid in CHECK_IDS)
            continue
        j = i + 1 if i + 1 < len(xs) else i - 1
        other = results[j][0]
        if other is None:
            neighbour = None
        elif j > i:
            neighbour = (bundles[0], other[0])
        else:
            neighbour = (other[0], bundles[0])
        records.extend(_point_records(x, bundles, neighbour, tol))
    records.sort(key=lambda r: (r.x, r.check_id))
    return records


_TARGETS = {"h1": h1, "h2": h2}
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, lo, hi, tol):
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def scan_max(target: str, a: float, b: float, samples: int = 100_000) -> tuple[float, float]:
    """Locate the maximum of ``h1`` or ``h2`` on ``[a, b]``.

    ``samples`` equally spaced points (endpoints included) are scanned and
    the best one is refined by golden-section search to 1e-12 within its
    neighbouring cells. An endpoint is returned exactly when no interior
    refinement beats it.
    """
    if target not in _TARGETS:
        raise DomainError(f"target must be 'h1' or 'h2', got {target!r}")
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b) and 0.0 < a < b):
        raise DomainError(f"need 0 < a < b, got [{a}, {b}]")
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 2:
        raise DomainError(f"samples must be an integer >= 2, got {samples!r}")
    f = _TARGETS[target]
    n = samples - 1
    xs = [a + (b - a) * i / n for i in range(n)] + [b]
    values = [f(t) for t in xs]
    best = max(range(samples), key=values.__getitem__)
    lo = xs[max(best - 1, 0)]
    hi = xs[min(best + 1, n)]
    t, v = _golden_max(f, lo, hi, 1e-12)
    if values[best] >= v:
        return xs[best], values[best]
    return t, v

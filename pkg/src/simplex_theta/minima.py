"""Minima over degree of ``P_j^(n)(t)`` and the global minimum of ``Omega_n``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import ConvergenceError, DomainError
from .specfun import (
    DEFAULT_CONFIG,
    PrecisionConfig,
    jacobi_scan,
    omega_derivative,
    omega_eval,
)

DELTA_GRID_SIZE = 512
# relative margin by which the tail bound must undercut |M|
CERT_MARGIN = 1e-8
TIE_TOL = 1e-12
MAX_PERIOD = 10_000


@dataclass(frozen=True)
class PolynomialMinimum:
    n: int
    t: float
    value: float
    argmin_j: int
    scanned_J: int
    certified: bool
    tail_bound_delta: Optional[float] = None
    warning: Optional[str] = None


@dataclass(frozen=True)
class BesselMinimum:
    n: int
    value: float
    location: float
    grid_verified: bool = True


def tail_bound(n: int, theta, delta, j):
    """Upper bound ``pi sqrt(n) cos^{n-3}(delta) + C^j`` on ``|P_j^(n)(cos theta)|``.

    ``C = (cos^2 theta + sin^2 theta sin^2 delta)^{1/2}``.  Valid for ``n >= 3``;
    broadcasts over array arguments.
    """
    if n < 3:
        raise DomainError("the tail bound requires n >= 3")
    delta = np.asarray(delta, dtype=float)
    C = np.sqrt(np.cos(theta) ** 2 + np.sin(theta) ** 2 * np.sin(delta) ** 2)
    out = math.pi * math.sqrt(n) * np.cos(delta) ** (n - 3) + C ** np.asarray(j, dtype=float)
    return float(out) if out.ndim == 0 else out


def _delta_grid() -> np.ndarray:
    return (np.arange(DELTA_GRID_SIZE) + 0.5) * (math.pi / 2) / DELTA_GRID_SIZE


def _rational_angle(t: float) -> Optional[Fraction]:
    """Return ``p/q`` if ``arccos(t)/pi`` equals it to rounding, else None."""
    r = math.acos(t) / math.pi
    frac = Fraction(r).limit_denominator(MAX_PERIOD)
    if abs(float(frac) - r) <= 1e-13:
        return frac
    return None


def _argmin_with_ties(values: np.ndarray) -> int:
    lo = float(np.min(values))
    return int(np.flatnonzero(values <= lo + TIE_TOL)[0])


def _chebyshev_minimum(t: float, cfg: PrecisionConfig) -> PolynomialMinimum:
    frac = _rational_angle(t)
    if frac is not None:
        # cos(j pi p/q) has period 2q in j
        period = 2 * frac.denominator
        vals = np.cos(np.arange(period) * math.pi * frac.numerator / frac.denominator)
        j = _argmin_with_ties(vals)
        return PolynomialMinimum(2, t, float(vals[j]), j, period - 1, True)
    vals = jacobi_scan(2, t, cfg.j_max, cfg)
    j = _argmin_with_ties(vals)
    return PolynomialMinimum(
        2, t, float(vals[j]), j, cfg.j_max, False,
        warning="irrational angle: infimum -1 may be unattained; scan minimum reported",
    )


@lru_cache(maxsize=4096)
def polynomial_minimum(n: int, t: float, cfg: PrecisionConfig = DEFAULT_CONFIG) -> PolynomialMinimum:
    """``M_n(t) = min_j P_j^(n)(t)`` with a truncation certificate when one exists.

    The scan stops at the first degree ``J`` for which some ``delta`` on a
    512-point grid makes ``tail_bound(n, theta, delta, J + 1)`` smaller than
    ``|min_{j<=J} P_j|``; every later degree is then provably larger.  For
    ``n = 3`` the bound is never below 1, so the scan runs to ``cfg.j_max`` and
    the result is uncertified.
    """
    if n < 2:
        raise DomainError(f"dimension n must be >= 2, got {n}")
    t = float(t)
    if t == -1.0:
        # P_j(-1) = (-1)^j and |P_j| <= 1, so the minimum -1 is attained at j = 1
        return PolynomialMinimum(n, t, -1.0, 1, 1, True)
    if not -1.0 < t < 1.0:
        raise DomainError(f"t must lie in (-1, 1), got {t}")
    if n == 2:
        return _chebyshev_minimum(t, cfg)

    lam = (n - 2) / 2
    theta = math.acos(t)
    can_certify = n > 3
    if can_certify:
        deltas = _delta_grid()
        const = math.pi * math.sqrt(n) * np.cos(deltas) ** (n - 3)
        log_C = 0.5 * np.log(t * t + (1.0 - t * t) * np.sin(deltas) ** 2)

    best, best_j = 1.0, 0
    need_J, need_delta = math.inf, None
    prev, cur = 1.0, t
    j = 1
    while True:
        if cur < best - TIE_TOL:
            best, best_j = cur, j
            if can_certify and best < 0:
                room = abs(best) * (1.0 - CERT_MARGIN) - const
                ok = (room > 0) & (log_C < 0)
                if np.any(ok):
                    # C^{J+1} < room  <=>  J >= floor(log(room) / log C)
                    J_req = np.full(deltas.shape, np.inf)
                    J_req[ok] = np.floor(np.log(room[ok]) / log_C[ok])
                    i = int(np.argmin(J_req))
                    need_J, need_delta = max(float(J_req[i]), 0.0), float(deltas[i])
        if j >= need_J:
            return PolynomialMinimum(n, t, best, best_j, j, True, need_delta)
        if j >= cfg.j_max:
            break
        prev, cur = cur, (2.0 * (j + lam) * t * cur - j * prev) / (j + 2.0 * lam)
        j += 1
    warning = "n = 3: tail bound is vacuous" if n == 3 else "no certificate reached by j_max"
    return PolynomialMinimum(n, t, best, best_j, cfg.j_max, False, warning=warning)


def _bisect(f, lo: float, hi: float, width: float = 1e-12, max_iter: int = 200) -> float:
    flo = f(lo)
    for _ in range(max_iter):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=512)
def bessel_minimum(n: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> BesselMinimum:
    """Global minimum ``m_n`` of ``Omega_n`` and its location.

    The first local minimum is found from the first sign change of the
    derivative and refined by bisection; a grid on ``[0, 4 z*]`` then checks
    that no later value undercuts it.
    """
    if n < 2:
        raise DomainError(f"dimension n must be >= 2, got {n}")
    step = 0.05
    u = np.arange(1, int(round(10 * n / step)) + 1) * step
    d = omega_derivative(n, u, cfg)
    up = np.flatnonzero(d >= 0)
    if up.size == 0:
        raise ConvergenceError(f"no stationary point of Omega_{n} found below u = {10 * n}")
    i = int(up[0])
    lo = float(u[i - 1]) if i > 0 else 0.0
    hi = float(u[i])
    z = _bisect(lambda x: omega_derivative(n, x, cfg), lo, hi)
    value = omega_eval(n, z, cfg)
    grid = np.linspace(0.0, 4.0 * z, 8001)
    verified = bool(np.min(omega_eval(n, grid, cfg)) >= value - 1e-10)
    return BesselMinimum(n, value, z, verified)

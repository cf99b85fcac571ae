"""Exponential decay bases for M_n(t), theta(S^{n-1}, k, t) and theta(R^n, k)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

# (2/e)^{1/2}: base of the known bound |m_n| <= (2/e + o(1))^{n/2}
BESSEL_DECAY_BASE = math.sqrt(2.0 / math.e)


@dataclass(frozen=True)
class DecayConstant:
    t: float
    theta_angle: float
    delta: float
    c: float
    C: float
    a: float


def _check_open_unit(t: float) -> float:
    t = float(t)
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t}")
    return t


def zero_free_exponent(t: float) -> float:
    """``a(t) = ((1 - t^2)^{-1/2} - 1)/2``."""
    return (1.0 / math.sqrt(1.0 - t * t) - 1.0) / 2.0


def largest_zero_bound(lam: float, j: int) -> float:
    """Elbert-Laforgia bound on the largest zero of ``C_j^lam``."""
    if j < 1:
        raise DomainError("degree must be >= 1")
    return math.sqrt((j * j + 2.0 * lam * j) / (j + lam) ** 2)


def nonneg_degree_threshold(n: int, t: float) -> float:
    """Degrees ``j <= a(t) n - 2 a(t)`` satisfy ``P_j^(n)(t) >= 0``."""
    if n < 3:
        raise DomainError("n must satisfy n >= 3")
    a = zero_free_exponent(_check_open_unit(t))
    return a * n - 2.0 * a


def _balance(delta: float, t: float, a: float) -> float:
    # log cos(delta) - a log C(delta); decreasing in delta
    C2 = t * t + (1.0 - t * t) * math.sin(delta) ** 2
    return math.log(math.cos(delta)) - 0.5 * a * math.log(C2)


def best_constant(t: float, tol: float = 1e-12) -> DecayConstant:
    """Solve ``cos(delta) = C(delta)^{a(t)}`` for ``delta`` in ``(0, pi/2)`` by bisection."""
    t = _check_open_unit(t)
    a = zero_free_exponent(t)
    lo, hi = 0.0, math.pi / 2 - 1e-15
    f_lo, f_hi = _balance(lo, t, a), _balance(hi, t, a)
    if not (f_lo > 0 > f_hi):
        raise ConvergenceError(f"no sign change of the balance equation for t={t}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _balance(mid, t, a) > 0:
            lo = mid
        else:
            hi = mid
    delta = 0.5 * (lo + hi)
    C = math.sqrt(t * t + (1.0 - t * t) * math.sin(delta) ** 2)
    return DecayConstant(t, math.acos(t), delta, math.cos(delta), C, a)


def bernoulli_bound(t: float) -> float:
    """Closed-form bound ``1 - s(1-s)/(4 + 2 s(1-s))`` on c(t), ``s = sin(arccos t)``.

    It dominates ``best_constant(t).c`` only while ``4s/(1-s) >= 1``, that is
    for ``t <= sqrt(24)/5``; beyond that Bernoulli's inequality runs the other way.
    """
    t = _check_open_unit(t)
    s = math.sqrt(1.0 - t * t)
    x = s * (1.0 - s)
    return 1.0 - x / (4.0 + 2.0 * x)


def sphere_decay_constant(k: int, t: float) -> float:
    """Dominant base over the terms ``|M_{n-i}(t/(1+it))|``, ``i = 0..k-2``."""
    if k < 2:
        raise DomainError("k must satisfy k >= 2")
    t = _check_open_unit(t)
    return max(best_constant(t / (1.0 + i * t)).c for i in range(k - 1))


def euclidean_decay_constant(k: int) -> float:
    """Dominant base of ``|m_n| + sum_{i<=k-3} |M_{n-i}(1/(2+i))|``."""
    if k < 3:
        raise DomainError("k must satisfy k >= 3")
    return max([BESSEL_DECAY_BASE] + [best_constant(1.0 / (2 + i)).c for i in range(k - 2)])

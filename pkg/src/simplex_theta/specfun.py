"""Normalized ultraspherical polynomials and the radial Bessel profile.

``P_j^(n)`` is the Jacobi polynomial with ``alpha = beta = (n - 3)/2``
scaled so that ``P_j^(n)(1) = 1``.  ``Omega_n`` is the radial profile
``Gamma(n/2) (2/u)^nu J_nu(u)`` with ``nu = (n - 2)/2`` and ``Omega_n(0) = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class PrecisionConfig:
    eps: float = 1e-12
    j_max: int = 10000
    # series is used for u <= u_max, quadrature beyond
    u_max: float = 12.0
    quadrature_points: int = 256

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("eps must be positive")
        if self.j_max < 16:
            raise DomainError("j_max must be at least 16")


DEFAULT_CONFIG = PrecisionConfig()


@dataclass(frozen=True)
class UltrasphericalFamily:
    """Normalized ultraspherical polynomials for the sphere S^{n-1}."""

    n: int
    lam: float = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"dimension n must be >= 2, got {self.n}")
        object.__setattr__(self, "lam", (self.n - 2) / 2)


@dataclass(frozen=True)
class RadialProfile:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"dimension n must be >= 2, got {self.n}")

    @property
    def nu(self) -> float:
        return (self.n - 2) / 2


def _family(family) -> UltrasphericalFamily:
    if isinstance(family, UltrasphericalFamily):
        return family
    return UltrasphericalFamily(int(family))


def _profile(profile) -> RadialProfile:
    if isinstance(profile, RadialProfile):
        return profile
    return RadialProfile(int(profile))


def _check_t(t: float) -> float:
    t = float(t)
    if not -1.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [-1, 1], got {t}")
    return t


def jacobi_eval(family, j: int, t: float) -> float:
    """Return ``P_j^(n)(t)``.

    For ``n = 2`` the normalized family is the Chebyshev family
    ``cos(j arccos t)``; otherwise the normalized three-term recurrence is run
    forward from ``P_0 = 1``, ``P_1 = t``.
    """
    fam = _family(family)
    t = _check_t(t)
    if j < 0:
        raise DomainError(f"degree must be nonnegative, got {j}")
    if fam.n == 2:
        return math.cos(j * math.acos(t))
    if j == 0:
        return 1.0
    lam = fam.lam
    prev, cur = 1.0, t
    for i in range(1, j):
        prev, cur = cur, (2.0 * (i + lam) * t * cur - i * prev) / (i + 2.0 * lam)
    return cur


def jacobi_scan(family, t: float, J: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Values ``P_0^(n)(t), ..., P_J^(n)(t)`` in one recurrence pass."""
    fam = _family(family)
    t = _check_t(t)
    if J < 0:
        raise DomainError(f"degree must be nonnegative, got {J}")
    if J > cfg.j_max:
        raise DomainError(f"J={J} exceeds j_max={cfg.j_max}")
    if fam.n == 2:
        return np.cos(np.arange(J + 1) * math.acos(t))
    out = np.empty(J + 1)
    out[0] = 1.0
    if J == 0:
        return out
    lam = fam.lam
    prev, cur = 1.0, t
    out[1] = t
    for i in range(1, J):
        prev, cur = cur, (2.0 * (i + lam) * t * cur - i * prev) / (i + 2.0 * lam)
        out[i + 1] = cur
    return out


# -- radial profile -----------------------------------------------------------

_SERIES_TERMS = 80


def _omega_series(nu: float, u: np.ndarray, derivative: bool = False) -> np.ndarray:
    # sum_k (-u^2/4)^k / (k! (nu+1)_k)
    q = -0.25 * u * u
    term = np.ones_like(u)
    total = np.zeros_like(u) if derivative else np.ones_like(u)
    for k in range(1, _SERIES_TERMS):
        term = term * q / (k * (nu + k))
        if derivative:
            # d/du of q^k is 2k q^k / u
            total = total + 2.0 * k * term
        else:
            total = total + term
        if not np.any(np.abs(term) * (k + 1) > 1e-18 * np.maximum(1.0, np.abs(total))):
            break
    if derivative:
        with np.errstate(divide="ignore", invalid="ignore"):
            total = np.where(u > 0, total / np.where(u > 0, u, 1.0), 0.0)
    return total


@lru_cache(maxsize=64)
def _half_nodes(m: int):
    # Gauss-Legendre on [0, pi/2]
    x, w = np.polynomial.legendre.leggauss(m)
    phi = (x + 1.0) * (math.pi / 4)
    return phi, w * (math.pi / 4)


@lru_cache(maxsize=256)
def _sin_power_integral(n: int) -> float:
    # int_0^pi sin^{n-2} phi dphi
    return math.sqrt(math.pi) * math.exp(math.lgamma((n - 1) / 2) - math.lgamma(n / 2))


def omega_quadrature(n: int, u, points: int = 256, derivative: bool = False) -> np.ndarray:
    """Gauss-Legendre quadrature of the Poisson integral for ``Omega_n``.

    ``Omega_n(u) = int_0^pi cos(u cos phi) sin^{n-2} phi dphi / int_0^pi sin^{n-2} phi dphi``.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    m = int(points + math.ceil(float(np.max(u, initial=0.0))))
    phi, w = _half_nodes(m)
    c = np.cos(phi)
    weight = w * np.sin(phi) ** (n - 2)
    arg = np.outer(u, c)
    if derivative:
        vals = -(np.sin(arg) * c) @ weight
    else:
        vals = np.cos(arg) @ weight
    return 2.0 * vals / _sin_power_integral(n)


def _omega_array(n: int, u: np.ndarray, cfg: PrecisionConfig, derivative: bool) -> np.ndarray:
    nu = (n - 2) / 2
    out = np.empty_like(u)
    small = u <= cfg.u_max
    if np.any(small):
        out[small] = _omega_series(nu, u[small], derivative)
    if np.any(~small):
        out[~small] = omega_quadrature(n, u[~small], cfg.quadrature_points, derivative)
    return out


def _omega_dispatch(profile, u, cfg, derivative):
    prof = _profile(profile)
    arr = np.asarray(u, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise DomainError("Omega_n is defined for u >= 0 only")
    vals = _omega_array(prof.n, np.atleast_1d(arr).ravel(), cfg, derivative)
    if arr.ndim == 0:
        return float(vals[0])
    return vals.reshape(arr.shape)


def omega_eval(profile, u, cfg: PrecisionConfig = DEFAULT_CONFIG):
    """``Omega_n(u)``; accepts a scalar or an array of nonnegative arguments."""
    return _omega_dispatch(profile, u, cfg, derivative=False)


def omega_derivative(profile, u, cfg: PrecisionConfig = DEFAULT_CONFIG):
    """``d Omega_n / du``, by term-wise differentiation of the same expansions."""
    return _omega_dispatch(profile, u, cfg, derivative=True)

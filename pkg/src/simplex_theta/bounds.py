"""Recursive theta bounds for simplex-avoiding sets on spheres and in R^n."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .minima import BesselMinimum, PolynomialMinimum, bessel_minimum, polynomial_minimum
from .specfun import DEFAULT_CONFIG, PrecisionConfig

SPHERE = "sphere"
EUCLIDEAN = "euclidean"

# float slack when testing the closed endpoint t = -1/(k-1)
_ENDPOINT_SLACK = 1e-12
# added to the bound before inverting it for the chromatic number
CHROMATIC_GUARD = 1e-9


@dataclass(frozen=True)
class SimplexInstance:
    n: int
    k: int
    t: Optional[float] = None
    space: str = SPHERE

    def __post_init__(self):
        n, k = self.n, self.k
        if self.space == SPHERE:
            if self.t is None:
                raise DomainError("a sphere instance needs an inner product t")
            if k < 2:
                raise DomainError("k must satisfy k >= 2")
            if k > n:
                raise DomainError("k must satisfy k <= n")
            t = float(self.t)
            if not t < 1.0:
                raise DomainError("t must satisfy t < 1")
            if t < -1.0 / (k - 1) - _ENDPOINT_SLACK:
                raise DomainError(f"t must satisfy t >= -1/(k-1) = {-1.0 / (k - 1):.6g}")
        elif self.space == EUCLIDEAN:
            if n < 2:
                raise DomainError("n must satisfy n >= 2")
            if not 3 <= k <= n + 1:
                raise DomainError("k must satisfy 3 <= k <= n + 1")
            if self.t is not None:
                raise DomainError("a euclidean instance takes no inner product")
        else:
            raise DomainError(f"unknown space {self.space!r}")


@dataclass(frozen=True)
class ChainLevel:
    level: int
    dimension: int
    inner_product: float
    minimum: PolynomialMinimum


@dataclass(frozen=True)
class BoundCertificate:
    instance: SimplexInstance
    value: float
    chain: tuple
    bessel: Optional[BesselMinimum] = None
    all_certified: bool = False

    def fold(self) -> float:
        """Recompute the bound from the stored minima alone."""
        return fold_chain([lvl.minimum.value for lvl in self.chain],
                          None if self.bessel is None else self.bessel.value)


def fold_chain(minima, bessel_value=None) -> float:
    """Fold ``gamma -> (gamma - M)/(1 - M)`` from the deepest level up.

    The deepest level is the pair-avoiding base case, i.e. ``gamma = 0``.
    """
    gamma = 0.0
    for M in reversed(list(minima)):
        gamma = (gamma - M) / (1.0 - M)
    if bessel_value is not None:
        gamma = (gamma - bessel_value) / (1.0 - bessel_value)
    return gamma


def inner_products(t: float, levels: int) -> list[float]:
    """``F_i = t/(1 + i t)`` for ``i = 0..levels-1``, snapped onto -1 at the endpoint."""
    out = []
    for i in range(levels):
        F = t / (1.0 + i * t)
        if abs(F + 1.0) <= _ENDPOINT_SLACK:
            F = -1.0
        out.append(F)
    return out


def _sphere_chain(n: int, k: int, t: float, cfg: PrecisionConfig) -> tuple:
    return tuple(
        ChainLevel(i, n - i, F, polynomial_minimum(n - i, F, cfg))
        for i, F in enumerate(inner_products(t, k - 1))
    )


def theta_sphere_base(n: int, t: float, cfg: PrecisionConfig = DEFAULT_CONFIG) -> float:
    """Bound for sets on S^{n-1} avoiding pairs at inner product t: ``-M/(1 - M)``."""
    if n < 2:
        raise DomainError("n must satisfy n >= 2")
    if not -1.0 <= t < 1.0:
        raise DomainError("t must lie in [-1, 1)")
    M = polynomial_minimum(n, float(t), cfg).value
    return -M / (1.0 - M)


def theta_sphere(n: int, k: int, t: float, cfg: PrecisionConfig = DEFAULT_CONFIG) -> BoundCertificate:
    inst = SimplexInstance(n, k, float(t), SPHERE)
    if k == 2:
        value = theta_sphere_base(n, float(t), cfg)
        chain = _sphere_chain(n, 2, float(t), cfg)
    else:
        chain = _sphere_chain(n, k, float(t), cfg)
        value = fold_chain([lvl.minimum.value for lvl in chain])
    return BoundCertificate(inst, value, chain, None, all(l.minimum.certified for l in chain))


def theta_euclidean(n: int, k: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> BoundCertificate:
    """``(theta(S^{n-1}, k-1, 1/2) - m_n)/(1 - m_n)`` with the full chain.

    The sphere chain runs over inner products ``1/(2 + i)`` in dimensions ``n - i``.
    """
    inst = SimplexInstance(n, k, None, EUCLIDEAN)
    chain = _sphere_chain(n, k - 1, 0.5, cfg)
    bessel = bessel_minimum(n, cfg)
    value = fold_chain([lvl.minimum.value for lvl in chain], bessel.value)
    certified = all(l.minimum.certified for l in chain) and bessel.grid_verified
    return BoundCertificate(inst, value, chain, bessel, certified)


def chromatic_lower(n: int, k: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> int:
    """Lower bound ``ceil(1/theta(R^n, k))`` on the measurable chromatic number."""
    value = theta_euclidean(n, k, cfg).value
    return math.ceil(1.0 / (value + CHROMATIC_GUARD))

"""Brute-force check of the closed-form optima via truncated coefficient LPs.

Each recursion level is the problem

    max f_0  s.t.  sum_j f_j = 1,  sum_j f_j p_j <= gamma,  f >= 0,

where ``p_j`` are the ``P_j^(n)(F_i)`` (or samples of ``Omega_n`` for the
Euclidean top level).  With one equality and one inequality every vertex has
at most two nonzero coordinates, so enumerating supports of size <= 2 solves
the LP exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bounds import EUCLIDEAN, BoundCertificate
from .errors import InfeasibleError
from .minima import bessel_minimum
from .specfun import DEFAULT_CONFIG, PrecisionConfig, jacobi_scan, omega_eval

SPHERE_TOL = 1e-8
EUCLIDEAN_TOL = 1e-5
EUCLIDEAN_GRID = 2000


@dataclass(frozen=True)
class TruncatedLP:
    coefficients: np.ndarray
    gamma: float

    def __post_init__(self):
        p = np.asarray(self.coefficients, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if abs(p[0] - 1.0) > 1e-12:
            raise ValueError("the first coefficient must be 1")
        object.__setattr__(self, "coefficients", p)


def lp_optimum(lp: TruncatedLP) -> float:
    p, gamma = lp.coefficients, float(lp.gamma)
    if gamma < p.min():
        raise InfeasibleError(f"gamma={gamma} is below every coefficient (min {p.min()})")
    # one-point supports: f_j = 1, objective 1 only for j = 0
    if p[0] <= gamma:
        return 1.0
    # Two-point supports with the inequality tight.  The objective is f_0, so
    # only supports {0, j} can score above zero; the rest contribute 0.
    pj = p[1:]
    diff = p[0] - pj
    keep = diff != 0
    f0 = (gamma - pj[keep]) / diff[keep]
    f0 = f0[(f0 >= 0) & (f0 <= 1)]
    best = float(f0.max()) if f0.size else 0.0
    return best


@dataclass
class LevelCheck:
    level: int
    kind: str
    closed_form: float
    lp_value: float
    truncation: int
    tol: float

    @property
    def ok(self) -> bool:
        return abs(self.closed_form - self.lp_value) <= self.tol


@dataclass
class ChainVerification:
    levels: list = field(default_factory=list)
    reported_value_ok: bool = True
    failed_level: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.reported_value_ok and all(c.ok for c in self.levels)

    def __bool__(self) -> bool:
        return self.passed


def verify_chain(cert: BoundCertificate, J: int = 500, cfg: PrecisionConfig = DEFAULT_CONFIG,
                 tol: float = SPHERE_TOL, euclidean_tol: float = EUCLIDEAN_TOL) -> ChainVerification:
    """Re-solve every recursion level as a truncated LP and compare.

    The truncation is raised to the level's argmin degree when ``J`` is
    smaller, so the LP always sees the degree the closed form used.  The first
    failing level is recorded in ``failed_level`` (-1 denotes the Euclidean
    top level).
    """
    report = ChainVerification()
    gamma = 0.0
    for lvl in reversed(cert.chain):
        M = lvl.minimum.value
        closed = (gamma - M) / (1.0 - M)
        J_eff = max(J, lvl.minimum.argmin_j)
        p = jacobi_scan(lvl.dimension, lvl.inner_product, J_eff,
                        cfg if J_eff <= cfg.j_max else PrecisionConfig(j_max=J_eff))
        lp = lp_optimum(TruncatedLP(p, gamma))
        report.levels.append(LevelCheck(lvl.level, "sphere", closed, lp, J_eff, tol))
        gamma = lp
    if cert.instance.space == EUCLIDEAN:
        n = cert.instance.n
        bessel = cert.bessel if cert.bessel is not None else bessel_minimum(n, cfg)
        m = bessel.value
        closed = (gamma - m) / (1.0 - m)
        z = np.linspace(0.0, 3.0 * bessel.location, EUCLIDEAN_GRID + 1)
        lp = lp_optimum(TruncatedLP(omega_eval(n, z, cfg), gamma))
        report.levels.append(LevelCheck(-1, "euclidean", closed, lp, EUCLIDEAN_GRID, euclidean_tol))
        gamma = lp
        top_tol = euclidean_tol
    else:
        top_tol = tol
    report.reported_value_ok = abs(cert.value - gamma) <= top_tol
    for c in report.levels:
        if not c.ok:
            report.failed_level = c.level
            break
    else:
        if not report.reported_value_ok:
            report.failed_level = cert.chain[0].level if cert.chain else -1
    return report

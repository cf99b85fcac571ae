"""Independent reference computations used only by the tests.

None of these share code paths with the package: Gegenbauer polynomials come
from the explicit coefficient sum in exact rationals, Bessel values from an
mpmath power series, roots from bisection or companion matrices.
"""
from fractions import Fraction
from math import factorial

import mpmath as mp
import numpy as np


def _rising(x, m):
    out = Fraction(1)
    for i in range(m):
        out *= x + i
    return out


def gegenbauer_coefficients(j, lam):
    """Monomial coefficients (ascending) of C_j^lam, exact."""
    lam = Fraction(lam)
    coeffs = [Fraction(0)] * (j + 1)
    for m in range(j // 2 + 1):
        c = Fraction((-1) ** m) * _rising(lam, j - m) / (factorial(m) * factorial(j - 2 * m))
        coeffs[j - 2 * m] += c * 2 ** (j - 2 * m)
    return coeffs


def normalized_gegenbauer_exact(n, j, t):
    """P_j^(n)(t) for n >= 3 as an exact Fraction (t must be rational)."""
    lam = Fraction(n - 2, 2)
    coeffs = gegenbauer_coefficients(j, lam)
    t = Fraction(t)
    value = sum(c * t**i for i, c in enumerate(coeffs))
    at_one = sum(coeffs)
    return value / at_one


def chebyshev_exact(j, t):
    """T_j(t) from the explicit sum, exact."""
    t = Fraction(t)
    total = Fraction(0)
    for m in range(j // 2 + 1):
        binom = factorial(j) // (factorial(2 * m) * factorial(j - 2 * m))
        total += binom * (t * t - 1) ** m * t ** (j - 2 * m)
    return total


def omega_series_mp(n, u, dps=50):
    """Omega_n(u) from its power series at high precision."""
    with mp.workdps(dps):
        return float(_omega_mp(n, mp.mpf(u)))


def dense_scan_minimum(n, lo=0.0, hi=8.0, points=40001):
    """Minimum of Omega_n on [lo, hi]: float series on a dense grid, then mpmath refinement."""
    us = np.linspace(lo, hi, points)
    nu = (n - 2) / 2
    q = -us * us / 4
    term = np.ones_like(us)
    vals = np.ones_like(us)
    for k in range(1, 120):
        term = term * q / (k * (nu + k))
        vals = vals + term
    i = int(np.argmin(vals))
    with mp.workdps(40):
        f = lambda x: _omega_mp(n, x)
        z = mp.findroot(lambda x: mp.diff(f, x), mp.mpf(us[i]))
        return float(f(z)), float(z)


def _omega_mp(n, u):
    nu = mp.mpf(n - 2) / 2
    q = -u * u / 4
    term = total = mp.mpf(1)
    k = 0
    while True:
        k += 1
        term = term * q / (k * (nu + k))
        total += term
        if abs(term) < mp.eps * 1e-3 and k > abs(u):
            return total


def bisect(f, lo, hi, tol=1e-14):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def largest_real_root(coeffs_ascending):
    roots = np.roots([float(c) for c in reversed(coeffs_ascending)])
    return float(max(r.real for r in roots if abs(r.imag) < 1e-9))


def lp_simplex(p, gamma):
    """Textbook LP solve through scipy, for cross-checking vertex enumeration."""
    from scipy.optimize import linprog

    p = np.asarray(p, dtype=float)
    c = np.zeros(p.size)
    c[0] = -1.0
    res = linprog(c, A_ub=[p], b_ub=[gamma], A_eq=[np.ones(p.size)], b_eq=[1.0],
                  bounds=[(0, None)] * p.size, method="highs")
    return None if res.status == 2 else -res.fun

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from simplex_theta.errors import DomainError
from simplex_theta.specfun import (
    PrecisionConfig,
    RadialProfile,
    UltrasphericalFamily,
    jacobi_eval,
    jacobi_scan,
    omega_derivative,
    omega_eval,
    omega_quadrature,
)

from oracles import chebyshev_exact, normalized_gegenbauer_exact, omega_series_mp

# Legendre P_0..P_6 at 1/2, from the exact coefficient oracle
LEGENDRE_HALF = [1, Fraction(1, 2), Fraction(-1, 8), Fraction(-7, 16), Fraction(-37, 128),
                 Fraction(23, 256), Fraction(331, 1024)]


def test_family_fields():
    fam = UltrasphericalFamily(5)
    assert fam.lam == 1.5
    with pytest.raises(DomainError):
        UltrasphericalFamily(1)
    with pytest.raises(DomainError):
        RadialProfile(1)


def test_config_validation():
    with pytest.raises(DomainError):
        PrecisionConfig(eps=0)
    with pytest.raises(DomainError):
        PrecisionConfig(j_max=8)


@pytest.mark.parametrize("n", [2, 3, 7, 40])
def test_degree_zero_is_one(n):
    assert jacobi_eval(n, 0, 0.3) == 1.0


def test_p2_at_zero():
    assert jacobi_eval(5, 2, 0.0) == pytest.approx(-0.25, abs=1e-15)


def test_chebyshev_limit():
    assert jacobi_eval(2, 3, 0.5) == pytest.approx(-1.0, abs=1e-12)
    assert float(chebyshev_exact(3, Fraction(1, 2))) == -1.0
    for j in range(12):
        for t in (Fraction(-3, 4), Fraction(1, 3), Fraction(9, 10)):
            assert jacobi_eval(2, j, float(t)) == pytest.approx(float(chebyshev_exact(j, t)), abs=1e-12)


def test_domain_errors():
    with pytest.raises(DomainError):
        jacobi_eval(4, 2, 1.5)
    with pytest.raises(DomainError):
        jacobi_eval(4, -1, 0.5)
    with pytest.raises(DomainError):
        jacobi_scan(4, 0.5, 20, PrecisionConfig(j_max=16))
    with pytest.raises(DomainError):
        omega_eval(3, -0.1)


def test_scan_at_one_is_all_ones():
    np.testing.assert_array_equal(jacobi_scan(4, 1.0, 10), np.ones(11))


def test_scan_small():
    np.testing.assert_allclose(jacobi_scan(5, 0.0, 2), [1.0, 0.0, -0.25], atol=1e-15)


def test_scan_matches_exact_legendre():
    vals = jacobi_scan(3, 0.5, 6)
    np.testing.assert_allclose(vals, [float(x) for x in LEGENDRE_HALF], atol=1e-14)
    for j in range(7):
        assert normalized_gegenbauer_exact(3, j, Fraction(1, 2)) == LEGENDRE_HALF[j]


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13, 30])
def test_scan_against_coefficient_oracle(n):
    for t in (Fraction(-7, 10), Fraction(-1, 3), Fraction(0), Fraction(1, 5), Fraction(4, 5)):
        vals = jacobi_scan(n, float(t), 12)
        expected = [float(normalized_gegenbauer_exact(n, j, t)) for j in range(13)]
        np.testing.assert_allclose(vals, expected, atol=1e-13)


def test_scan_matches_eval_pointwise():
    for n in (2, 3, 6, 21):
        vals = jacobi_scan(n, 0.37, 60)
        for j in (0, 1, 7, 33, 60):
            assert vals[j] == pytest.approx(jacobi_eval(n, j, 0.37), abs=1e-12)


def test_recurrence_and_boundedness_grid():
    ts = np.linspace(-1, 1, 41)
    for n in range(2, 65, 3):
        lam = (n - 2) / 2
        for t in ts:
            P = jacobi_scan(n, t, 201)
            assert np.max(np.abs(P)) <= 1 + 1e-12
            if n == 2:
                continue
            j = np.arange(1, 201)
            lhs = (j + 2 * lam) * P[2:]
            rhs = 2 * (j + lam) * t * P[1:-1] - j * P[:-2]
            assert np.max(np.abs(lhs - rhs)) <= 1e-10


def test_scan_against_scipy_large_degree():
    # scipy's Gegenbauer evaluation is an independent route
    for n, t in [(3, 0.5), (5, -0.3), (9, 0.8)]:
        lam = (n - 2) / 2
        j = np.arange(0, 301)
        ref = special.eval_gegenbauer(j, lam, t) / special.eval_gegenbauer(j, lam, 1.0)
        np.testing.assert_allclose(jacobi_scan(n, t, 300), ref, atol=1e-10)


@pytest.mark.parametrize("n", [3, 4, 7, 12])
@pytest.mark.parametrize("t", [-0.6, 0.2, 0.75])
def test_envelope_decays(n, t):
    P = np.abs(jacobi_scan(n, t, 1000))
    assert P[500:].max() < P[50:101].max()


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 40), j=st.integers(0, 300), t=st.floats(-1, 1))
def test_bounded_by_one(n, j, t):
    assert abs(jacobi_eval(n, j, t)) <= 1 + 1e-12


def test_omega_at_zero():
    assert omega_eval(7, 0.0) == 1.0
    assert omega_eval(RadialProfile(2), 0.0) == 1.0


def test_omega_first_minimum_n2():
    assert omega_eval(2, 3.8317059702075125) == pytest.approx(-0.402759395702553, abs=1e-12)


def test_omega_three_is_sinc():
    assert omega_eval(3, math.pi) == pytest.approx(0.0, abs=1e-12)
    u = np.linspace(0.01, 150, 3000)
    np.testing.assert_allclose(omega_eval(3, u), np.sin(u) / u, atol=1e-12)


def test_omega_against_scipy_bessel():
    u = np.linspace(0.05, 200, 4001)
    for n in (2, 4, 9, 20, 33, 64):
        nu = (n - 2) / 2
        ref = math.gamma(n / 2) * (2 / u) ** nu * special.jv(nu, u)
        np.testing.assert_allclose(omega_eval(n, u), ref, atol=1e-12)


def test_omega_against_mp_series():
    for n in (2, 5, 16):
        for u in (0.5, 6.0, 11.9, 12.1, 20.0):
            assert omega_eval(n, u) == pytest.approx(omega_series_mp(n, u), abs=1e-12)


def test_omega_matches_quadrature():
    u = np.linspace(0, 60, 601)
    for n in range(2, 33):
        diff = np.abs(omega_eval(n, u) - omega_quadrature(n, u, points=400))
        assert diff.max() <= 1e-9


def test_omega_bounded():
    u = np.linspace(0, 100, 5001)
    for n in (2, 3, 10, 50):
        assert np.max(np.abs(omega_eval(n, u))) <= 1 + 1e-12


def test_omega_derivative_finite_difference():
    h = 1e-5
    for n in (2, 3, 8):
        for u in (1.0, 5.0, 15.0, 40.0):
            fd = (omega_eval(n, u + h) - omega_eval(n, u - h)) / (2 * h)
            assert omega_derivative(n, u) == pytest.approx(fd, abs=1e-8)


def test_omega_shape_preserved():
    assert omega_eval(4, np.zeros((2, 3))).shape == (2, 3)
    assert isinstance(omega_eval(4, 1.0), float)

import math

import numpy as np
import pytest
from scipy import integrate, optimize, special

from src.elliptic import check_parameter, complete_K, jacobi_eval, jacobi_jet
from src.errors import EllipticDomainError
from src.jets import jet_seed
from src.jets import functions as jf


def test_pythagorean_identities(rng):
    z = rng.uniform(-20.0, 20.0, 10_000)
    m = rng.uniform(0.0, 1.0, 10_000)
    sn, cn, dn = jacobi_eval(z, m)
    assert np.max(np.abs(sn ** 2 + cn ** 2 - 1.0)) < 1e-12
    assert np.max(np.abs(dn ** 2 + m * sn ** 2 - 1.0)) < 1e-12


def test_matches_scipy_ellipj(rng):
    z = rng.uniform(-10.0, 10.0, 2_000)
    m = rng.uniform(0.01, 0.99, 2_000)
    sn, cn, dn = jacobi_eval(z, m)
    ref_sn, ref_cn, ref_dn, _ = special.ellipj(z, m)
    np.testing.assert_allclose(sn, ref_sn, atol=1e-11)
    np.testing.assert_allclose(cn, ref_cn, atol=1e-11)
    np.testing.assert_allclose(dn, ref_dn, atol=1e-11)


def test_trigonometric_limit():
    z = np.linspace(-5.0, 5.0, 101)
    sn, cn, dn = jacobi_eval(z, 0.0)
    np.testing.assert_allclose(sn, np.sin(z), atol=1e-15)
    np.testing.assert_allclose(cn, np.cos(z), atol=1e-15)
    np.testing.assert_allclose(dn, 1.0, atol=1e-15)


def test_hyperbolic_limit():
    z = np.linspace(-5.0, 5.0, 101)
    sn, cn, dn = jacobi_eval(z, 1.0)
    np.testing.assert_allclose(sn, np.tanh(z), atol=1e-15)
    np.testing.assert_allclose(cn, 1.0 / np.cosh(z), atol=1e-15)
    np.testing.assert_allclose(dn, 1.0 / np.cosh(z), atol=1e-15)


def test_scalar_inputs_return_floats():
    sn, cn, dn = jacobi_eval(0.5, 0.3)
    assert isinstance(sn, float)
    assert isinstance(dn, float)


def test_quarter_period():
    assert complete_K(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    quad, _ = integrate.quad(lambda th: 1.0 / math.sqrt(1.0 - 0.5 * math.sin(th) ** 2), 0.0, math.pi / 2)
    assert complete_K(0.5) == pytest.approx(quad, rel=1e-10)
    ms = np.array([0.1, 0.5, 0.9, 0.999])
    np.testing.assert_allclose(complete_K(ms), special.ellipk(ms), rtol=1e-13)


def test_sn_vanishes_at_twice_quarter_period():
    m = 0.7
    K = complete_K(m)
    sn, cn, dn = jacobi_eval(np.array([K, 2 * K]), m)
    assert sn[0] == pytest.approx(1.0, abs=1e-12)
    assert dn[0] == pytest.approx(math.sqrt(1.0 - m), abs=1e-12)
    assert sn[1] == pytest.approx(0.0, abs=1e-12)
    assert cn[1] == pytest.approx(-1.0, abs=1e-12)


@pytest.mark.parametrize("m", [-0.1, 1.5, float("nan")])
def test_parameter_outside_unit_interval(m):
    with pytest.raises(EllipticDomainError):
        jacobi_eval(0.3, m)
    with pytest.raises(EllipticDomainError):
        check_parameter(m)


def test_quarter_period_diverges_at_one():
    with pytest.raises(EllipticDomainError):
        complete_K(1.0)


@pytest.mark.parametrize("m", [0.0, 0.35, 0.8, 1.0])
def test_jet_derivatives_follow_the_elliptic_system(m):
    z0 = np.linspace(-3.0, 3.0, 13)
    z, _ = jet_seed(z0, 0.0, nx=4, nt=0)
    s, c, d = jacobi_jet(z, m)
    np.testing.assert_allclose(s.partial(1, 0), c.value * d.value, atol=1e-13)
    np.testing.assert_allclose(c.partial(1, 0), -s.value * d.value, atol=1e-13)
    np.testing.assert_allclose(d.partial(1, 0), -m * s.value * c.value, atol=1e-13)
    # (sn')^2 = (1 - sn^2)(1 - m sn^2)
    sv = s.value
    np.testing.assert_allclose(s.partial(1, 0) ** 2, (1 - sv ** 2) * (1 - m * sv ** 2), atol=1e-12)


def test_sn_by_inverting_the_elliptic_integral():
    m = 0.5

    def integrand(th):
        return 1.0 / math.sqrt(1.0 - m * math.sin(th) ** 2)

    def incomplete(phi):
        value, _ = integrate.quad(integrand, 0.0, phi, epsabs=1e-14, epsrel=1e-13)
        return value

    phi = optimize.bisect(lambda p: incomplete(p) - 1.0, 0.0, math.pi / 2, xtol=1e-14)
    sn, cn, _ = jacobi_eval(1.0, m)
    assert sn == pytest.approx(math.sin(phi), abs=1e-10)
    assert cn == pytest.approx(math.cos(phi), abs=1e-10)


def test_real_periods(rng):
    z = rng.uniform(-5.0, 5.0, 200)
    m = rng.uniform(0.01, 0.99, 200)
    K = complete_K(m)
    sn, cn, dn = jacobi_eval(z, m)
    sn4, cn4, _ = jacobi_eval(z + 4 * K, m)
    _, _, dn2 = jacobi_eval(z + 2 * K, m)
    np.testing.assert_allclose(sn4, sn, rtol=0, atol=1e-11)
    np.testing.assert_allclose(cn4, cn, rtol=0, atol=1e-11)
    np.testing.assert_allclose(dn2, dn, rtol=0, atol=1e-11)


def test_hyperbolic_jet_matches_tanh_jet():
    z, _ = jet_seed(np.linspace(-3.0, 3.0, 13), 0.0, nx=6, nt=0)
    s, c, _ = jacobi_jet(z, 1.0)
    np.testing.assert_allclose(s.coeffs, jf.tanh(z).coeffs, rtol=0, atol=1e-13)
    np.testing.assert_allclose(c.coeffs, jf.sech(z).coeffs, rtol=0, atol=1e-13)

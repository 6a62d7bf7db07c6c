import math
import random

import mpmath as mp
import numpy as np
import pytest
from numpy.testing import assert_allclose

from telegraph.errors import DivergenceError, ParameterError, PoleError, SingularityError, UndefinedError
from telegraph.specfun import (
    contiguous_middle,
    gamma,
    gamma_ratio,
    gauss_2f1,
    gauss_2f1_contiguous,
    gauss_2f1_regularized,
    gauss_2f1_series,
    heun_c,
    heun_c_coefficients,
    heun_g,
    heun_g_coefficients,
    legendre_orthogonality_integral,
    legendre_p,
    legendre_q,
    principal_power,
    rgamma,
)


def relerr(v, r, floor=1e-300):
    return abs(v - r) / max(abs(r), floor)


# ---------------------------------------------------------------- gamma


def test_gamma_values():
    assert_allclose(gamma(1), 1, rtol=1e-15)
    assert_allclose(gamma(0.5), math.sqrt(math.pi), rtol=1e-14)
    assert_allclose(gamma(-2.5), -8 * math.sqrt(math.pi) / 15, rtol=1e-13)


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        gamma(z)
    assert rgamma(z) == 0


def test_gamma_against_mpmath():
    rng = random.Random(11)
    for _ in range(300):
        z = complex(rng.uniform(-20, 20), rng.uniform(-5, 5))
        if abs(z) > 20:
            continue
        assert relerr(gamma(z), complex(mp.gamma(z))) < 1e-12, z


def test_gamma_ratio():
    assert_allclose(gamma_ratio([5.0], [3.0]), 12.0, rtol=1e-14)


# --------------------------------------------------------- hypergeometric


def test_2f1_spec_examples():
    assert gauss_2f1(0, 0.5, 1.5, 0.7) == 1
    assert_allclose(gauss_2f1(1.5, 0.5, 1.5, 0.75), 2.0, rtol=1e-14)
    assert_allclose(gauss_2f1(1, 0.5, 1.5, 0.25), math.log(3), rtol=1e-14)


def test_2f1_termination_is_exact():
    # a nonpositive integer: the polynomial does not change with extra terms
    v1 = gauss_2f1_series(-3, 0.5, 1.5, 0.6)
    poly = sum(mp.rf(-3, n) * mp.rf(0.5, n) / (mp.rf(1.5, n) * mp.factorial(n)) * 0.6 ** n
               for n in range(4))
    assert_allclose(v1, float(poly), rtol=1e-15)


def test_2f1_c_pole():
    with pytest.raises(ParameterError):
        gauss_2f1(0.5, 0.5, -2, 0.3)
    # terminates before the pole
    assert_allclose(gauss_2f1(-1, 0.5, -2, 0.3), 1 + 0.5 * 0.3 / 2, rtol=1e-15)


def test_2f1_log_case_raises():
    with pytest.raises(ParameterError, match="logarithmic"):
        gauss_2f1(0.5, 0.5, 1.0, 0.99)


def test_2f1_random_against_mpmath():
    rng = random.Random(1)
    checked = 0
    for _ in range(1500):
        a, b, c = (rng.uniform(-4, 4) for _ in range(3))
        if rng.random() < 0.3:
            z = complex(rng.uniform(-6, 6), 0)
        else:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        try:
            v = gauss_2f1(a, b, c, z)
        except (ParameterError, DivergenceError):
            continue
        # real z > 1 is taken on the lower lip
        zz = mp.mpc(z.real, -1e-30) if z.imag == 0 and z.real > 1 else z
        r = complex(mp.hyp2f1(a, b, c, zz))
        assert relerr(v, r) < 1e-10, (a, b, c, z)
        checked += 1
    assert checked > 1200


def test_2f1_half_integer_against_mpmath():
    rng = random.Random(2)
    vals = [x / 2 for x in range(-8, 9)]
    for _ in range(1000):
        a, b, c = (rng.choice(vals) for _ in range(3))
        if c <= 0 and c == int(c):
            continue
        z = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.3, 0.3))
        try:
            v = gauss_2f1_regularized(a, b, c, z)
        except (ParameterError, DivergenceError):
            continue
        r = complex(mp.hyp2f1(a, b, c, z) / mp.gamma(c))
        assert relerr(v, r, 1e-10) < 1e-10, (a, b, c, z)


def test_regularized_at_c_pole_is_limit():
    # 2F1(a,b;c;z)/Gamma(c) as c -> -1 with a = -1 terminating before the pole
    assert gauss_2f1_regularized(-1, 0.5, -1, 0.3) == 0


def test_contiguous_examples():
    f0, f1 = gauss_2f1(0, 0.5, 1.5, 0.3), gauss_2f1(1, 0.5, 1.5, 0.3)
    assert_allclose(gauss_2f1_contiguous(1, 0.5, 1.5, 0.3, f0, f1),
                    float(mp.hyp2f1(2, 0.5, 1.5, 0.3)), rtol=1e-12)
    assert_allclose(gauss_2f1_contiguous(1, 0.25, 1.5, 0.0, 1.0, 1.0), 1.0, rtol=1e-15)
    # adjacent closed forms with b = c: 2F1(a, b; b; z) = (1 - z)^(-a)
    z = 0.5
    got = gauss_2f1_contiguous(1.5, 1.5, 1.5, z, (1 - z) ** -0.5, (1 - z) ** -1.5)
    assert_allclose(got, (1 - z) ** -2.5, rtol=1e-13)


def test_contiguous_middle_coefficient_b_one():
    # with b = 1 the middle coefficient takes the form 2a - c - a z + z
    a, c, z = 0.7, 2.3, 0.4
    assert_allclose(contiguous_middle(a, 1.0, c, z), 2 * a - c - a * z + z, rtol=1e-15)


def test_contiguous_pole():
    with pytest.raises(ParameterError):
        gauss_2f1_contiguous(0, 0.5, 1.5, 0.3, 1.0, 1.0)
    with pytest.raises(ParameterError):
        gauss_2f1_contiguous(1, 0.5, 1.5, 1.0, 1.0, 1.0)


# ---------------------------------------------------------------- Legendre


def test_legendre_examples():
    assert_allclose(legendre_p(1, 1, 2.0), math.sqrt(3), rtol=1e-14)
    for y in (2.0, -3.0, 0.3):
        assert_allclose(legendre_p(0, 0, y), 1.0, rtol=1e-15)
    assert_allclose(legendre_p(1, 0, 0.5, "on-cut"), 0.5, rtol=1e-15)
    assert_allclose(legendre_q(0, 0, 2.0), 0.5 * math.log(3), rtol=1e-14)
    assert_allclose(legendre_q(1, 0, 2.0), math.log(3) - 1, rtol=1e-13)


def test_legendre_q0_by_quadrature():
    # Q_0(y) = int_0^inf dt / (y + sqrt(y^2 - 1) cosh t)
    from scipy.integrate import quad
    y = 2.0
    val, _ = quad(lambda t: 1.0 / (y + math.sqrt(y * y - 1) * np.cosh(t)), 0, 60)
    assert_allclose(legendre_q(0, 0, y), val, rtol=1e-10)


def test_legendre_singular_points():
    for y in (1.0, -1.0):
        with pytest.raises(SingularityError):
            legendre_p(0.5, 0.3, y)
        with pytest.raises(SingularityError):
            legendre_q(0.5, 0.3, y)


def test_legendre_q_undefined():
    # nu + mu + 1 a nonpositive integer: Gamma(nu + mu + 1) pole
    with pytest.raises(UndefinedError):
        legendre_q(-3, 1, 2.0)


def test_legendre_random_against_mpmath():
    rng = random.Random(3)
    for _ in range(600):
        nu = rng.choice([rng.uniform(-3, 5), rng.randint(-3, 5), rng.randint(-2, 5) + 0.5])
        mu = rng.choice([rng.uniform(-3, 5), rng.randint(0, 6), rng.randint(-2, 5) + 0.5])
        y = rng.choice([rng.uniform(1.05, 6), rng.uniform(-6, -1.05), rng.uniform(-0.95, 0.95)])
        try:
            v = legendre_p(nu, mu, y)
        except ParameterError:
            continue
        assert relerr(v, complex(mp.legenp(nu, mu, y, type=3)), 1e-12) < 1e-9, (nu, mu, y)
        if -1 < y < 1:
            v = legendre_p(nu, mu, y, "on-cut")
            assert relerr(v, complex(mp.legenp(nu, mu, y, type=2)), 1e-12) < 1e-9, (nu, mu, y)
        try:
            v = legendre_q(nu, mu, y)
        except ParameterError:
            continue
        try:
            r = complex(mp.legenq(nu, mu, y, type=3))
        except (ValueError, ZeroDivisionError):
            continue
        assert relerr(v, r, 1e-12) < 1e-9, (nu, mu, y)


def test_ferrers_q_integer():
    for l, m, x in [(2, 1, 0.3), (3, 0, -0.6), (4, 2, 0.8)]:
        assert relerr(legendre_q(l, m, x, "on-cut"), complex(mp.legenq(l, m, x, type=2)), 1e-12) < 1e-10


@pytest.mark.parametrize("l1,l2,m,expected", [(1, 2, 1, 0.0), (2, 2, 1, 2.4), (0, 0, 0, 2.0)])
def test_orthogonality_examples(l1, l2, m, expected):
    assert abs(legendre_orthogonality_integral(l1, l2, m) - expected) < 1e-10


def test_orthogonality_table():
    for l1 in range(7):
        for l2 in range(7):
            for m in range(min(l1, l2) + 1):
                want = 0.0 if l1 != l2 else 2 / (2 * l1 + 1) * math.factorial(l1 + m) / math.factorial(l1 - m)
                got = legendre_orthogonality_integral(l1, l2, m)
                assert abs(got - want) <= 1e-8 * max(1.0, want)


# -------------------------------------------------------------------- Heun


def test_heun_normalization():
    assert heun_c(0.3, -0.5, 1.2, -0.1, 0.4, 0.0) == 1
    assert heun_g(2.0, 0.7, -1.0, 0.5, 0.5, 0.0, 0.0) == 1


def test_heun_g_divergence():
    with pytest.raises(DivergenceError):
        heun_g(2.0, 0.7, -1.0, 0.5, 0.5, 0.0, 0.99)
    with pytest.raises(DivergenceError):
        heun_c(0.3, -0.5, 1.2, -0.1, 0.4, 0.97)


def test_heun_c_against_mpmath_ode():
    # integrate the confluent Heun ODE with mpmath from the series at z = 0.1
    al, be, ga, de, et = 0.3, -0.5, 1.2, -0.1, 0.4
    mu = (al - be - ga + al * be - be * ga) / 2 - et
    nu = (al + be + ga + al * ga + be * ga) / 2 + de + et

    def p(z):
        return al + (be + 1) / z + (ga + 1) / (z - 1)

    def q(z):
        return mu / z + nu / (z - 1)

    h = 1e-6
    z0 = 0.1
    y0 = heun_c(al, be, ga, de, et, z0)
    dy0 = (heun_c(al, be, ga, de, et, z0 + h) - heun_c(al, be, ga, de, et, z0 - h)) / (2 * h)
    sol = mp.odefun(lambda z, y: [y[1], -p(z) * y[1] - q(z) * y[0]], z0, [y0.real, dy0.real])
    assert_allclose(heun_c(al, be, ga, de, et, 0.6).real, float(sol(0.6)[0]), rtol=1e-8)


def test_heun_g_against_mpmath_ode():
    a, q, al, be, ga, de = 2.0, 0.7, -1.0, 0.5, 0.5, 0.3
    ep = al + be + 1 - ga - de

    def rhs(z, y):
        p = ga / z + de / (z - 1) + ep / (z - a)
        r = (al * be * z - q) / (z * (z - 1) * (z - a))
        return [y[1], -p * y[1] - r * y[0]]

    z0, h = 0.1, 1e-6
    y0 = heun_g(a, q, al, be, ga, de, z0)
    dy0 = (heun_g(a, q, al, be, ga, de, z0 + h) - heun_g(a, q, al, be, ga, de, z0 - h)) / (2 * h)
    sol = mp.odefun(rhs, z0, [y0.real, dy0.real])
    assert_allclose(heun_g(a, q, al, be, ga, de, 0.7).real, float(sol(0.7)[0]), rtol=1e-8)


def test_heun_first_coefficients():
    # the z^0 balance of each ODE gives c1 = -mu/(1 + beta) and q/(a gamma)
    al, be, ga, de, et = 0.3, -0.5, 1.2, -0.1, 0.4
    mu = (al - be - ga + al * be - be * ga) / 2 - et
    c = heun_c_coefficients(al, be, ga, de, et, 1)
    assert_allclose(c[1].real, -mu / (1 + be), rtol=1e-14)
    g = heun_g_coefficients(2.0, 0.7, -1.0, 0.5, 0.5, 0.0, 1)
    assert_allclose(g[1].real, 0.7 / (2.0 * 0.5), rtol=1e-15)


def test_principal_power_branch():
    assert_allclose(principal_power(-1.0, 0.5), 1j, atol=1e-16)
    assert_allclose(principal_power(-0.75, 1.0), -0.75, rtol=1e-16)

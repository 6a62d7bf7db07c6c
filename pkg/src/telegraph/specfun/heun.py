"""Local Frobenius series of the confluent and general Heun functions.

Both are normalized to 1 at z = 0 and follow the parameter conventions
of Maple (HeunC) and DLMF/Maple (HeunG).
"""
from __future__ import annotations

from ..errors import DivergenceError, ParameterError
from ._cplx import nonpos_int
from .hypergeometric import DELTA_SERIES

__all__ = ["heun_c", "heun_c_coefficients", "heun_g", "heun_g_coefficients"]

_MAX_TERMS = 20000
_REL_TOL = 1e-16


def heun_c_coefficients(alpha, beta, gamma, delta, eta, n: int) -> list[complex]:
    """First ``n + 1`` Taylor coefficients of HeunC at z = 0.

    The confluent Heun equation is taken in the form

        y'' + (alpha + (1+beta)/z + (1+gamma)/(z-1)) y'
            + (mu/z + nu/(z-1)) y = 0

    with mu = (alpha - beta - gamma + alpha*beta - beta*gamma)/2 - eta and
    nu = (alpha + beta + gamma + alpha*gamma + beta*gamma)/2 + delta + eta.
    """
    alpha, beta, gamma = complex(alpha), complex(beta), complex(gamma)
    mu = 0.5 * (alpha - beta - gamma + alpha * beta - beta * gamma) - eta
    nu = 0.5 * (alpha + beta + gamma + alpha * gamma + beta * gamma) + delta + eta
    c = [1.0 + 0j]
    c_prev = 0j
    for k in range(n):
        den = (k + 1) * (k + 1 + beta)
        if den == 0:
            raise ParameterError("HeunC series undefined: 1 + beta is a non-positive integer")
        nxt = ((k * (k - 1) + k * (2 + beta + gamma - alpha) - mu) * c[k]
               + (alpha * (k - 1) + mu + nu) * c_prev) / den
        c_prev = c[k]
        c.append(nxt)
    return c


def heun_g_coefficients(a, q, alpha, beta, gamma, delta, n: int) -> list[complex]:
    """First ``n + 1`` Taylor coefficients of HeunG at z = 0.

    The general Heun equation is

        y'' + (gamma/z + delta/(z-1) + eps/(z-a)) y'
            + (alpha*beta*z - q) / (z (z-1) (z-a)) y = 0,

    eps = alpha + beta + 1 - gamma - delta.
    """
    a, q = complex(a), complex(q)
    alpha, beta, gamma, delta = complex(alpha), complex(beta), complex(gamma), complex(delta)
    if a == 0:
        raise ParameterError("HeunG singular point a must be nonzero")
    if nonpos_int(gamma) is not None:
        raise ParameterError("HeunG series undefined: gamma is a non-positive integer")
    eps = alpha + beta + 1 - gamma - delta
    c = [1.0 + 0j]
    c_prev = 0j
    for j in range(n):
        nxt = (((j * ((j - 1 + gamma) * (1 + a) + a * delta + eps) + q) * c[j]
                - (j - 1 + alpha) * (j - 1 + beta) * c_prev)
               / (a * (j + 1) * (j + gamma)))
        c_prev = c[j]
        c.append(nxt)
    return c


def _sum_three_term(step, z, radius):
    """Sum c_n z^n where ``step`` yields successive coefficients."""
    z = complex(z)
    if abs(z) > radius - DELTA_SERIES:
        raise DivergenceError(
            f"|z| = {abs(z):.6g} outside the series radius {radius:g} - {DELTA_SERIES}")
    if z == 0:
        return 1.0 + 0j
    r = abs(z) / radius
    s = 0j
    zn = 1.0 + 0j
    small = 0
    for n, c in zip(range(_MAX_TERMS), step):
        t = c * zn
        s += t
        zn *= z
        # a three-term recurrence can produce isolated tiny terms, so ask
        # for two consecutive ones under the geometric tail bound
        if abs(t) <= _REL_TOL * (1 - r) * abs(s) and n > 2:
            small += 1
            if small >= 2:
                return s
        else:
            small = 0
    raise DivergenceError("Heun series did not converge")


def _heun_c_stream(alpha, beta, gamma, delta, eta):
    alpha, beta, gamma = complex(alpha), complex(beta), complex(gamma)
    mu = 0.5 * (alpha - beta - gamma + alpha * beta - beta * gamma) - eta
    nu = 0.5 * (alpha + beta + gamma + alpha * gamma + beta * gamma) + delta + eta
    c_prev, c = 0j, 1.0 + 0j
    k = 0
    while True:
        yield c
        den = (k + 1) * (k + 1 + beta)
        if den == 0:
            raise ParameterError("HeunC series undefined: 1 + beta is a non-positive integer")
        c_prev, c = c, ((k * (k - 1) + k * (2 + beta + gamma - alpha) - mu) * c
                        + (alpha * (k - 1) + mu + nu) * c_prev) / den
        k += 1


def _heun_g_stream(a, q, alpha, beta, gamma, delta):
    a, q = complex(a), complex(q)
    alpha, beta, gamma, delta = complex(alpha), complex(beta), complex(gamma), complex(delta)
    eps = alpha + beta + 1 - gamma - delta
    c_prev, c = 0j, 1.0 + 0j
    j = 0
    while True:
        yield c
        c_prev, c = c, (((j * ((j - 1 + gamma) * (1 + a) + a * delta + eps) + q) * c
                         - (j - 1 + alpha) * (j - 1 + beta) * c_prev)
                        / (a * (j + 1) * (j + gamma)))
        j += 1


def heun_c(alpha, beta, gamma, delta, eta, z) -> complex:
    """Confluent Heun function HeunC(alpha, beta, gamma, delta, eta; z).

    Local solution at z = 0 with value 1, summed for ``|z| <= 0.95``.
    See :func:`heun_c_coefficients` for the equation.
    """
    if nonpos_int(1 + complex(beta)) is not None:
        raise ParameterError("HeunC series undefined: 1 + beta is a non-positive integer")
    return _sum_three_term(_heun_c_stream(alpha, beta, gamma, delta, eta), z, 1.0)


def heun_g(a, q, alpha, beta, gamma, delta, z) -> complex:
    """General Heun function HeunG(a, q, alpha, beta, gamma, delta; z).

    Local solution at z = 0 with value 1, summed for
    ``|z| <= min(1, |a|) - 0.05``.
    """
    if complex(a) == 0:
        raise ParameterError("HeunG singular point a must be nonzero")
    if nonpos_int(gamma) is not None:
        raise ParameterError("HeunG series undefined: gamma is a non-positive integer")
    return _sum_three_term(_heun_g_stream(a, q, alpha, beta, gamma, delta), z,
                           min(1.0, abs(complex(a))))

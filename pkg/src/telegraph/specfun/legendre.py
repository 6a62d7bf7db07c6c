"""Associated Legendre functions of the first and second kind.

Two conventions are offered:

``"off-cut"`` (default)
    Hobson's functions P_nu^mu(y), Q_nu^mu(y) analytic in the plane cut
    along (-inf, 1], evaluated from their hypergeometric representations
    with principal-branch powers. Real ``y`` on the cut is taken as the
    limit from above, ``y + i0`` (the same convention as mpmath).
``"on-cut"``
    Ferrers' functions on -1 < x < 1.

Integer degree and order with ``nu >= mu >= 0`` use polynomial
recurrences instead of the hypergeometric series.
"""
from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError, SingularityError, UndefinedError
from ._cplx import as_complex, expipi, near_int, principal_power
from .gamma import gamma, rgamma
from .hypergeometric import gauss_2f1_regularized

__all__ = ["legendre_p", "legendre_q", "legendre_orthogonality_integral"]

_CONVENTIONS = ("off-cut", "on-cut")


def _check_convention(convention):
    if convention not in _CONVENTIONS:
        raise ParameterError(f"unknown Legendre convention {convention!r}")


def _lip_power(base, p, lip):
    """``base**p`` with a negative real base sitting on the lip arg = lip*pi."""
    base = as_complex(base)
    if base.imag == 0 and base.real < 0:
        return abs(base.real) ** p * expipi(lip * p)
    return principal_power(base, p)


def _int_degree_order(nu, mu):
    """(l, m) when both are integers with l >= m >= 0, else None.

    Negative integer degrees are folded with P_nu = P_{-nu-1}.
    """
    l, m = near_int(nu), near_int(mu)
    if l is None or m is None or m < 0:
        return None
    if l < 0:
        l = -l - 1
    if l < m:
        return None
    return l, m


def _dm_legendre(l, m, y):
    """m-th derivative of the Legendre polynomial P_l at ``y``."""
    r_prev = 0.0
    r = 1.0
    for j in range(1, 2 * m, 2):
        r *= j
    for n in range(m, l):
        r_prev, r = r, ((2 * n + 1) * y * r - (n + m) * r_prev) / (n - m + 1)
    return r


def legendre_p(nu, mu, y, convention="off-cut") -> complex:
    """Associated Legendre function of the first kind P_nu^mu(y).

    Parameters
    ----------
    nu : float
        Degree.
    mu : float
        Order.
    y : complex
        Argument. With ``convention="on-cut"`` it must lie in (-1, 1).
    convention : {"off-cut", "on-cut"}

    Raises
    ------
    SingularityError
        At the branch points ``y = +-1`` for nonzero order.
    """
    _check_convention(convention)
    y = as_complex(y)
    nu, mu = float(nu), float(mu)
    lm = _int_degree_order(nu, mu)
    if convention == "on-cut":
        if lm is not None:
            l, m = lm
            return (-1) ** m * principal_power(1 - y * y, m / 2) * _dm_legendre(l, m, y)
        if y in (1, -1) and mu != 0:
            raise SingularityError("Ferrers function is singular at x = +-1")
        return (principal_power((1 + y) / (1 - y), mu / 2)
                * gauss_2f1_regularized(-nu, nu + 1, 1 - mu, (1 - y) / 2))
    if lm is not None:
        l, m = lm
        if m == 0:
            return complex(_dm_legendre(l, 0, y))
        if y == 1:
            return 0j
        if y == -1:
            raise SingularityError("P_nu^mu is singular at y = -1")
        return (_lip_power((y + 1) / (y - 1), m / 2, -1) * (y - 1) ** m
                * _dm_legendre(l, m, y))
    if y in (1, -1):
        raise SingularityError("P_nu^mu is singular at y = +-1")
    # for real -1 < y < 1 the ratio is negative; y + i0 puts it at arg -pi
    return (_lip_power((y + 1) / (y - 1), mu / 2, -1)
            * gauss_2f1_regularized(-nu, nu + 1, 1 - mu, (1 - y) / 2))


def _ferrers_q_int(l, m, x):
    """Ferrers Q_l^m for integers l >= 0, m >= 0 by recurrences."""
    q0 = 0.5 * np.log((1 + x) / (1 - x))
    qs = [q0, x * q0 - 1.0]
    for n in range(1, l + 1):
        qs.append(((2 * n + 1) * x * qs[n] - n * qs[n - 1]) / (n + 1))
    if m == 0:
        return qs[l]
    s = np.sqrt(1 - x * x)
    # order 1 from the derivative relation, then raise the order
    q_prev = qs[l]
    q_cur = -(l + 1) * (x * qs[l] - qs[l + 1]) / s
    for k in range(0, m - 1):
        q_prev, q_cur = q_cur, -2 * (k + 1) * x / s * q_cur - (l - k) * (l + k + 1) * q_prev
    return q_cur


def legendre_q(nu, mu, y, convention="off-cut") -> complex:
    """Associated Legendre function of the second kind Q_nu^mu(y).

    The off-cut function carries the phase ``exp(i pi mu)`` and is
    returned as a complex number without any projection.

    Raises
    ------
    UndefinedError
        Off-cut, when ``nu + mu + 1`` is a non-positive integer (the
        Gamma prefactor has a pole and no finite function exists).
    SingularityError
        At ``y = +-1`` and, off-cut, at ``y = 0``.
    """
    _check_convention(convention)
    y = as_complex(y)
    nu, mu = float(nu), float(mu)
    if convention == "on-cut":
        if y in (1, -1):
            raise SingularityError("Ferrers Q is singular at x = +-1")
        l, m = near_int(nu), near_int(mu)
        if m is not None:
            if l is not None and l >= 0 and m >= 0:
                return complex(_ferrers_q_int(l, m, y))
            raise ParameterError("Ferrers Q with integer order needs a non-negative integer degree")
        s = math.pi / (2 * math.sin(mu * math.pi))
        t1 = (math.cos(mu * math.pi) * principal_power((1 + y) / (1 - y), mu / 2)
              * gauss_2f1_regularized(-nu, nu + 1, 1 - mu, (1 - y) / 2))
        t2 = (gamma(nu + mu + 1) * rgamma(nu - mu + 1)
              * principal_power((1 - y) / (1 + y), mu / 2)
              * gauss_2f1_regularized(-nu, nu + 1, 1 + mu, (1 - y) / 2))
        return s * (t1 - t2)
    s = nu + mu + 1
    if near_int(s) is not None and near_int(s) <= 0:
        raise UndefinedError(f"Q_nu^mu undefined for nu + mu + 1 = {s:g}")
    if y in (1, -1):
        raise SingularityError("Q_nu^mu is singular at y = +-1")
    if y == 0:
        raise SingularityError("the off-cut representation of Q is singular at y = 0")
    # Hobson's (y**2 - 1)**(mu/2) means (y - 1)**(mu/2) (y + 1)**(mu/2);
    # on the cut y + i0 both factors are principal powers
    pref = (expipi(mu) * math.sqrt(math.pi) * gamma(s)
            * principal_power(y - 1, mu / 2) * principal_power(y + 1, mu / 2)
            / (2.0 ** (nu + 1) * principal_power(y, s)))
    w = 1 / (y * y)
    f = gauss_2f1_regularized((s + 1) / 2, s / 2, nu + 1.5, w)
    if y.imag == 0 and y.real < 0 and w.real > 1:
        # 1/(y + i0)**2 lies above the cut of 2F1 for -1 < y < 0, while the
        # kernel returns the limit from below; parameters are real
        f = f.conjugate()
    return pref * f


def legendre_orthogonality_integral(l1: int, l2: int, m: int) -> float:
    """Integral of P_{l1}^m P_{l2}^m over (-1, 1) by Gauss-Legendre quadrature.

    The integrand is a polynomial of degree ``l1 + l2``, so the rule with
    ``(l1 + l2) // 2 + 1`` nodes is exact; a few extra nodes are used.
    """
    l1, l2, m = int(l1), int(l2), int(m)
    if not (l1 >= m >= 0 and l2 >= m):
        raise ParameterError("need l1, l2 >= m >= 0")
    x, w = np.polynomial.legendre.leggauss((l1 + l2) // 2 + 4)
    f1 = np.array([legendre_p(l1, m, xi, "on-cut").real for xi in x])
    f2 = np.array([legendre_p(l2, m, xi, "on-cut").real for xi in x])
    return float(np.sum(w * f1 * f2))

"""Families with alpha = -2 built from associated Legendre functions.

With k = a / (2 eps) and y = sqrt(eps) eta the reduced equation

    (eps eta^2 - 1) f'' - (2 eps + a) eta f' + 2 (eps + a) f = 0

is solved by (eps eta^2 - 1)^(k/2 + 1) times a Legendre function of
degree k - 1 and order k + 2 at y. (Some texts swap the words degree and
order; here the degree is the lower index.)
"""
from __future__ import annotations

import math

from ..errors import ParameterError, UndefinedError
from ..specfun import gamma, legendre_p, legendre_q, principal_power, rgamma
from ..specfun._cplx import expipi, near_int
from ._series import check_time
from .params import Family, ModelParams, resolve_alpha

__all__ = [
    "legendre_regular_profile",
    "legendre_irregular_profile",
    "legendre_regular_degenerate",
    "legendre_regular_closed_form",
    "legendre_regular_printed_form",
    "legendre_irregular_closed_form",
    "legendre_field",
    "branch_identity",
    "travelling_wave_factorization",
]


def legendre_regular_degenerate(params: ModelParams) -> bool:
    """True when the regular profile vanishes identically.

    This happens for k = 0, 1, 2, ... where 1/Gamma(-k-1) = 0. At k = -1
    Gamma(-k-1) also has a pole, but it is cancelled by the factor
    1/(2 eps + a) and the profile is the finite P_1^1 limit.
    """
    k = params.k
    n = near_int(k)
    return n is not None and n >= 0


def legendre_regular_profile(eta, params: ModelParams) -> complex:
    """``P_{k-1}^{k+2}(sqrt(eps) eta) (eps eta^2 - 1)^(k/2+1)`` with principal branches."""
    resolve_alpha(Family.LegendreRegular, params)
    eta = float(eta)
    if legendre_regular_degenerate(params):
        return 0j
    k = params.k
    y = math.sqrt(params.epsilon) * eta
    return legendre_p(k - 1.0, k + 2.0, y) * principal_power(y * y - 1.0, k / 2 + 1.0)


def legendre_irregular_profile(eta, params: ModelParams) -> complex:
    """``Q_{k-1}^{k+2}(sqrt(eps) eta) (eps eta^2 - 1)^(k/2+1)`` with principal branches.

    Raises
    ------
    UndefinedError
        When 2k + 2 is a non-positive integer.
    """
    resolve_alpha(Family.LegendreIrregular, params)
    eta = float(eta)
    k = params.k
    y = math.sqrt(params.epsilon) * eta
    return legendre_q(k - 1.0, k + 2.0, y) * principal_power(y * y - 1.0, k / 2 + 1.0)


def legendre_regular_closed_form(eta, params: ModelParams) -> float:
    """Elementary form of the regular profile for sqrt(eps) eta > 1.

    ``-2^(k+1) (1 + (2k+1) y^2) / Gamma(-k)`` with y = sqrt(eps) eta; the
    profile is a quadratic in eta. Inside the cone and for y < -1 the
    profile carries an extra constant branch phase.
    """
    k = params.k
    y = math.sqrt(params.epsilon) * float(eta)
    if y <= 1:
        raise ParameterError("closed form is stated for sqrt(eps) eta > 1")
    return float((-(2.0 ** (k + 1)) * (1 + (2 * k + 1) * y * y) * rgamma(-k)).real)


def legendre_regular_printed_form(eta, params: ModelParams) -> float:
    """The form ``2 eps (y+1)^(k+1) (1 + (eps+a) eta^2) / (Gamma(-k-1)(2 eps + a))``.

    Kept for comparison only: it carries an extra factor ((y+1)/2)^(k+1)
    relative to :func:`legendre_regular_closed_form` and does not solve the
    reduced equation unless k = -1.
    """
    eps, a, k = params.epsilon, params.a, params.k
    eta = float(eta)
    y = math.sqrt(eps) * eta
    if 2 * eps + a == 0:
        raise ParameterError("printed form has a zero denominator at a = -2 eps")
    return float((2 * eps * (y + 1) ** (k + 1) * (1 + eta * eta * (eps + a))
                  * rgamma(-k - 1) / (2 * eps + a)).real)


def legendre_irregular_closed_form(eta, params: ModelParams) -> complex:
    """Elementary form of the irregular profile for sqrt(eps) eta > 1.

    ``exp(i pi (k+2)) sqrt(pi) Gamma(2k+2) / (2^k Gamma(k+1/2) (2k+1)) (1 + (2k+1) y^2)``.
    Degree and order differ by three, so P and Q are proportional here.
    """
    k = params.k
    y = math.sqrt(params.epsilon) * float(eta)
    if y <= 1:
        raise ParameterError("closed form is stated for sqrt(eps) eta > 1")
    c = (expipi(k + 2) * math.sqrt(math.pi) * gamma(2 * k + 2)
         * rgamma(k + 0.5) / (2.0 ** k * (2 * k + 1)))
    return c * (1 + (2 * k + 1) * y * y)


def legendre_field(x, t, params: ModelParams, kind: str = "regular") -> complex:
    """T(x, t) = t^2 f(x / t) for the regular or irregular profile."""
    check_time(t)
    if kind == "regular":
        f = legendre_regular_profile(x / t, params)
    elif kind == "irregular":
        f = legendre_irregular_profile(x / t, params)
    else:
        raise ParameterError(f"kind must be 'regular' or 'irregular', got {kind!r}")
    return t * t * f


def branch_identity(eta, params: ModelParams):
    """Both sides of ``i (eps eta^2 - 1)^p = (1 - eps eta^2)^p``, p = k/2 + 1.

    The identity holds inside the cone on principal branches whenever
    p = 3/2 (mod 2).
    """
    p = params.k / 2 + 1.0
    w = params.epsilon * float(eta) ** 2 - 1.0
    return 1j * principal_power(w, p), principal_power(-w, p)


def travelling_wave_factorization(x, t, params: ModelParams):
    """Split the a = 4 eps irregular field into two counter-propagating waves.

    With c = 1/sqrt(eps),
    ``t^2 Q_1^4(x/(ct)) (eps x^2/t^2 - 1)^2 = q_factor * U(x+ct) * U(x-ct)``,
    ``U(s) = s^2`` and ``q_factor = Q_1^4(x/(ct)) / (c^4 t^2)``.

    Returns
    -------
    q_factor : complex
    u_plus : float
        ``(x + ct)^2``
    u_minus : float
        ``(x - ct)^2``
    """
    if abs(params.k - 2.0) > 1e-12:
        raise ParameterError("the factorization needs a = 4 eps (exponent k/2 + 1 = 2)")
    check_time(t)
    c = 1.0 / math.sqrt(params.epsilon)
    x, t = float(x), float(t)
    q = legendre_q(1.0, 4.0, x / (c * t))
    return q / (c ** 4 * t * t), (x + c * t) ** 2, (x - c * t) ** 2


def check_irregular_defined(params: ModelParams):
    k = params.k
    n = near_int(2 * k + 2)
    if n is not None and n <= 0:
        raise UndefinedError(f"Q_nu^mu undefined for nu + mu + 1 = {2 * k + 2:g}")

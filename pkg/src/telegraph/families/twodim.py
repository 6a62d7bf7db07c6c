"""Two-dimensional families.

The L1 ansatz uses eta = (x + y) / t^beta, the radial one
eta = sqrt(x^2 + y^2) / t.
"""
from __future__ import annotations

import math

from ..errors import ComplexOrderError, ParameterError, SingularityError
from ..specfun import gauss_2f1, legendre_p, legendre_q, principal_power
from ._series import check_time
from .params import Family, ModelParams, resolve_alpha

__all__ = [
    "omega_discriminant",
    "omega_first_group",
    "order_omega",
    "o_discriminant",
    "order_o",
    "twod_l1_profile",
    "twod_l1_beta2_profile",
    "twod_radial_profile",
    "twod_field",
]

GOLDEN_ALPHA = (math.sqrt(5.0) - 1.0) / 2.0


def omega_first_group(alpha: float) -> float:
    """-4 alpha + 4 - 4 alpha^2, the epsilon^2 coefficient of the discriminant."""
    return -4.0 * alpha + 4.0 - 4.0 * alpha * alpha


def omega_discriminant(alpha: float, eps: float, a: float) -> float:
    return omega_first_group(alpha) * eps * eps + 4.0 * a * (alpha - 1.0) * eps + a * a


def order_omega(alpha: float, eps: float, a: float) -> float:
    """Degree of the Legendre functions in the 2D L1 family (beta = 1).

    Raises
    ------
    ComplexOrderError
        When the discriminant is negative.
    """
    d = omega_discriminant(alpha, eps, a)
    if d < 0:
        raise ComplexOrderError(f"discriminant {d:g} < 0 gives a complex degree")
    return (math.sqrt(d) - eps) / (2.0 * eps)


def o_discriminant(eps: float, a: float) -> float:
    return -4.0 * eps * eps - 12.0 * a * eps + a * a


def order_o(eps: float, a: float) -> float:
    """Degree for the beta = 2 variant; equals ``order_omega(-2, eps, a)``."""
    d = o_discriminant(eps, a)
    if d < 0:
        raise ComplexOrderError(f"discriminant {d:g} < 0 gives a complex degree")
    return (math.sqrt(d) - eps) / (2.0 * eps)


def _l1_combination(eta, params, degree):
    eps, k = params.epsilon, params.k
    eta = float(eta)
    y = math.sqrt(eps / 2.0) * eta
    order = k - 0.5
    val = 0j
    if params.c1 != 0:
        val += params.c1 * legendre_p(degree, order, y)
    if params.c2 != 0:
        val += params.c2 * legendre_q(degree, order, y)
    return principal_power(eps * eta * eta - 2.0, k / 2.0 - 0.25) * val


def twod_l1_profile(eta, params: ModelParams) -> complex:
    """``(eps eta^2 - 2)^(k/2 - 1/4) [c1 P + c2 Q]_omega^(k - 1/2)(sqrt(eps/2) eta)``.

    ``params.alpha`` must be set; omega comes from :func:`order_omega`.
    """
    alpha = resolve_alpha(Family.TwoD_L1_beta1, params)
    return _l1_combination(eta, params, order_omega(alpha, params.epsilon, params.a))


def twod_l1_beta2_profile(eta, params: ModelParams) -> complex:
    """beta = 2 variant: same structure with degree ``order_o`` and alpha = -2."""
    resolve_alpha(Family.TwoD_L1_beta2, params)
    return _l1_combination(eta, params, order_o(params.epsilon, params.a))


def twod_radial_profile(eta, params: ModelParams) -> complex:
    """Radial profile, a combination of two 2F1 in ``1 - eps eta^2``.

    ``c1 F(alpha/2, (1+alpha)/2 - k; alpha + 1/2 - k; z)
    + c2 F(1 - alpha/2, k + 1/2 - alpha/2; 3/2 - alpha + k; z) (eps eta^2 - 1)^(k + 1/2 - alpha)``

    Raises
    ------
    SingularityError
        For eta <= 0.
    """
    alpha = resolve_alpha(Family.TwoD_Radial, params)
    eta = float(eta)
    if eta <= 0:
        raise SingularityError("the radial profile needs eta > 0")
    eps, k = params.epsilon, params.k
    z = 1.0 - eps * eta * eta
    val = 0j
    if params.c1 != 0:
        val += params.c1 * gauss_2f1(alpha / 2, (1 + alpha) / 2 - k, alpha + 0.5 - k, z)
    if params.c2 != 0:
        val += (params.c2 * gauss_2f1(1 - alpha / 2, k + 0.5 - alpha / 2, 1.5 - alpha + k, z)
                * principal_power(-z, k + 0.5 - alpha))
    return val


def twod_field(family, x, y, t, params: ModelParams) -> complex:
    """S(x, y, t) = t^-alpha g(eta) for a two-dimensional family."""
    family = Family.parse(family)
    check_time(t)
    alpha = resolve_alpha(family, params)
    x, y, t = float(x), float(y), float(t)
    if family is Family.TwoD_L1_beta1:
        return t ** -alpha * twod_l1_profile((x + y) / t, params)
    if family is Family.TwoD_L1_beta2:
        return t ** -alpha * twod_l1_beta2_profile((x + y) / (t * t), params)
    if family is Family.TwoD_Radial:
        return t ** -alpha * twod_radial_profile(math.hypot(x, y) / t, params)
    raise ParameterError(f"{family.value} is not a two-dimensional family")

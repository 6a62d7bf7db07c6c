"""Families of the equation with a source term.

The harmonic source -D x^2 / t^4 fixes alpha = 2 and the Coulomb source
-q / (x t) fixes alpha = -1; both profiles are local Heun series.
"""
from __future__ import annotations

import math

from ..errors import SingularityError
from ..specfun import heun_c, heun_g, principal_power
from ._series import check_time
from .params import Family, ModelParams, resolve_alpha

__all__ = [
    "harmonic_heun_params",
    "coulomb_heun_params",
    "harmonic_profile",
    "coulomb_profile",
    "source_field",
]


def harmonic_heun_params(params: ModelParams, odd: bool = False):
    """HeunC parameters (alpha, beta, gamma, delta, eta) of the even/odd branch."""
    eps, k = params.epsilon, params.k
    return (0.0, 0.5 if odd else -0.5, k - 2.0, -params.D / (4 * eps * eps), 1.25 - 0.75 * k)


def harmonic_profile(eta, params: ModelParams) -> complex:
    """``[c1 H_even + c2 eta H_odd](eps eta^2) (eps eta^2 - 1)^(k-2)``.

    H_even/H_odd are HeunC with beta = -1/2 and +1/2. The series is
    summed for eps eta^2 <= 0.95.
    """
    resolve_alpha(Family.SourceHarmonic, params)
    eta = float(eta)
    z = params.epsilon * eta * eta
    val = 0j
    if params.c1 != 0:
        val += params.c1 * heun_c(*harmonic_heun_params(params, False), z)
    if params.c2 != 0:
        val += params.c2 * eta * heun_c(*harmonic_heun_params(params, True), z)
    return principal_power(z - 1.0, params.k - 2.0) * val


def coulomb_heun_params(params: ModelParams, second: bool = False):
    """HeunG parameters (a, q, alpha, beta, gamma, delta) in z = sqrt(eps) eta + 1."""
    k = params.k
    qs = params.q / math.sqrt(params.epsilon)
    if second:
        # exponent 1 - gamma = 1 + k at z = 0; accessory parameter
        # q + (1 - gamma)(a delta + eps_g) with eps_g = -k
        return (2.0, qs + k - k * k, k, 1.0 - k, 2.0 + k, 0.0)
    return (2.0, qs + 2.0 * k, -1.0, -2.0 * k, -k, 0.0)


def coulomb_profile(eta, params: ModelParams) -> complex:
    """Coulomb-source profile from two HeunG series about eta = -1/sqrt(eps).

    The second branch carries the principal-power prefactor
    ``(eps eta^2 - 1)^(k/2) (-sqrt(eps) eta - 1)^(1 + k/2) (1 - sqrt(eps) eta)^(-k/2)``.
    The series converges for -1.95 < sqrt(eps) eta < -0.05.

    Raises
    ------
    SingularityError
        At eta = 0.
    """
    resolve_alpha(Family.SourceCoulomb, params)
    eta = float(eta)
    if eta == 0:
        raise SingularityError("the Coulomb source is singular at eta = 0")
    se, k = math.sqrt(params.epsilon), params.k
    z = se * eta + 1.0
    val = 0j
    if params.c1 != 0:
        val += params.c1 * heun_g(*coulomb_heun_params(params, False), z)
    if params.c2 != 0:
        pref = (principal_power(se * se * eta * eta - 1.0, k / 2)
                * principal_power(-se * eta - 1.0, 1.0 + k / 2)
                * principal_power(1.0 - se * eta, -k / 2))
        val += params.c2 * pref * heun_g(*coulomb_heun_params(params, True), z)
    return val


def source_field(family, x, t, params: ModelParams) -> complex:
    """U(x, t) = t^-alpha h(x / t) with the forced exponent."""
    family = Family.parse(family)
    check_time(t)
    alpha = resolve_alpha(family, params)
    prof = harmonic_profile if family is Family.SourceHarmonic else coulomb_profile
    return float(t) ** -alpha * prof(float(x) / float(t), params)

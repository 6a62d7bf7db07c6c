"""One-dimensional families with alpha = 1.

Both conserve the heat mass. With k = a / (2 eps) the profiles solve

    (eps eta^2 - 1) f'' + (4 eps - a) eta f' + (2 eps - a) f = 0,

which integrates once to (eps eta^2 - 1) f' + (2 eps - a) eta f = c1.
"""
from __future__ import annotations

import math

import numpy as np

from ..errors import ExponentError, ParameterError
from ..specfun import gauss_2f1, principal_power
from ..specfun._cplx import expipi
from ._series import check_time, is_zero, poch_ratio
from .params import Branch, Family, ModelParams, resolve_alpha

__all__ = ["compact_profile", "compact_field", "hyper_profile", "hyper_field"]

_N_TERMS = 90


def _branch_of(eta: float, eps: float) -> Branch:
    if eps * eta * eta < 1.0:
        return Branch.Inner
    return Branch.Left if eta < 0 else Branch.Right


def compact_profile(eta, params: ModelParams, branch=None) -> float:
    """Compactly supported profile ``(1 - eps eta^2)_+^(k-1)``.

    Parameters
    ----------
    eta : float
    params : ModelParams
        Uses ``epsilon`` and ``a``; alpha must be 1 or unset.
    branch : Branch, optional
        ``None`` (default) gives the positive part with zero extension
        outside the light cone. ``Left``/``Right`` select the mirror
        solution ``(eps eta^2 - 1)^(k-1)`` on that side of the cone.

    Raises
    ------
    ExponentError
        On the support edge when ``k - 1 < 0`` (the profile is unbounded).
    """
    resolve_alpha(Family.Compact1D, params)
    eta = float(eta)
    eps, p = params.epsilon, params.k - 1.0
    w = 1.0 - eps * eta * eta
    if branch is None or Branch(branch) is Branch.Inner:
        if branch is not None and w <= 0:
            raise ParameterError("eta lies outside the Inner branch")
        if w > 0:
            return w ** p
        if w == 0 or abs(w) < 1e-15:
            if p < 0:
                raise ExponentError("profile is unbounded at the support edge for k < 1")
            return 1.0 if p == 0 else 0.0
        return 0.0
    branch = Branch(branch)
    if _branch_of(eta, eps) is not branch and w != 0:
        raise ParameterError(f"eta lies outside the {branch.value} branch")
    if w == 0 and p < 0:
        raise ExponentError("mirror profile is unbounded on the light cone for k < 1")
    return (-w) ** p


def compact_field(x, t, params: ModelParams, branch=None) -> float:
    """T(x, t) = t^-1 (1 - eps x^2 / t^2)_+^(k-1)."""
    check_time(t)
    return compact_profile(x / t, params, branch) / t


# ---------------------------------------------------------------- Hyper1D


def _phi_scaled(v, p_shift, k, coef):
    """sum coef_n v^n / (n + 1 - k), with the n = k - 1 term v^(k-1) ln v."""
    n = np.arange(len(coef), dtype=float)
    p = n + 1.0 - k
    out = 0.0
    for j in range(len(coef)):
        if is_zero(p[j]):
            out += coef[j] * v ** (k - 1.0) * math.log(v)
        else:
            out += coef[j] * v ** n[j] / p[j]
    return out


def _inner_scaled(r, eps, k):
    """(1 - eps r^2)^(k-1) * J(r) for 0 <= r < 1/sqrt(eps), J(r) = int_0^r (1 - eps s^2)^-k ds."""
    z = eps * r * r
    if z <= 0.5:
        return (1.0 - z) ** (k - 1.0) * r * gauss_2f1(0.5, k, 1.5, z).real
    # near the cone: J = C - G(v) / (2 sqrt eps), v = 1 - eps s^2,
    # G(v) = sum (1/2)_n / n! * v^(n+1-k) / (n+1-k)
    se = math.sqrt(eps)
    coef = poch_ratio(0.5, _N_TERMS)
    rm = 1.0 / math.sqrt(2.0 * eps)
    jm = rm * gauss_2f1(0.5, k, 1.5, 0.5).real
    gm = _phi_scaled(0.5, None, k, coef) * 0.5 ** (1.0 - k)
    const = jm + gm / (2.0 * se)
    v = 1.0 - z
    return v ** (k - 1.0) * const - _phi_scaled(v, None, k, coef) / (2.0 * se)


def _outer_far_scaled(r, eps, k):
    """w^(k-1) H_A(r) with H_A = sum (k)_n/n! r u^(k+n) / (1-2k-2n), u = 1/(eps r^2)."""
    u = 1.0 / (eps * r * r)
    nterms = _N_TERMS + int(10 * abs(k))
    coef = poch_ratio(k, nterms)
    out = 0.0
    w_pow = (1.0 - u) ** (k - 1.0)
    for n in range(nterms):
        d = 1.0 - 2.0 * k - 2.0 * n
        if is_zero(d):
            # the n-th term integrates to eps^-(k+n) ln r with k + n = 1/2
            out += coef[n] * (eps * r * r - 1.0) ** (k - 1.0) * math.log(r) / math.sqrt(eps)
        else:
            out += coef[n] * r * w_pow * u ** (1 + n) / d
    return out


def _outer_near_scaled(r, eps, k):
    """w^(k-1) H_B(r) with H_B = (1/(2 sqrt eps)) sum (3/2-k)_n/n! phi(n+1-k, v), v = 1 - 1/(eps r^2)."""
    v = 1.0 - 1.0 / (eps * r * r)
    coef = poch_ratio(1.5 - k, _N_TERMS + int(10 * abs(k)))
    return (1.0 - v) ** (1.0 - k) * _phi_scaled(v, None, k, coef) / (2.0 * math.sqrt(eps))


def _outer_scaled(r, eps, k):
    """w^(k-1) J(r) for r > 1/sqrt(eps), J' = w^-k.

    For k > 1/2 the antiderivative vanishing at infinity is used, for
    k <= 1/2 the one vanishing on the cone; each side of the switch
    point eps r^2 = 2 uses the series that converges there.
    """
    rs = math.sqrt(2.0 / eps)
    ws = 1.0  # eps rs^2 - 1
    far = eps * r * r >= 2.0
    w = eps * r * r - 1.0
    if k > 0.5:
        if far:
            return _outer_far_scaled(r, eps, k)
        off = (_outer_far_scaled(rs, eps, k) - _outer_near_scaled(rs, eps, k)) / ws ** (k - 1.0)
        return _outer_near_scaled(r, eps, k) + off * w ** (k - 1.0)
    if not far:
        return _outer_near_scaled(r, eps, k)
    off = (_outer_near_scaled(rs, eps, k) - _outer_far_scaled(rs, eps, k)) / ws ** (k - 1.0)
    return _outer_far_scaled(r, eps, k) + off * w ** (k - 1.0)


def hyper_profile(eta, params: ModelParams) -> complex:
    """Profile of the family with a nonzero first integration constant.

    ``f = w^(k-1) (c1 K + c2)`` with ``w = eps eta^2 - 1`` taken as a
    principal power and ``K' = w^-k``, ``K`` odd. Inside the cone
    ``K = exp(-i pi k) eta 2F1(1/2, k; 3/2; eps eta^2)``, so the c1 part
    is the real function ``-(1 - eps eta^2)^(k-1) eta 2F1(...)``;
    outside, ``K`` is a real antiderivative (see ``_outer_scaled``).
    The c2 part is complex inside the cone.

    Raises
    ------
    ExponentError
        On the light cone itself.
    """
    resolve_alpha(Family.Hyper1D, params)
    eta = float(eta)
    eps, k = params.epsilon, params.k
    w = eps * eta * eta - 1.0
    if w == 0:
        raise ExponentError("the profile is not evaluated on the light cone")
    r, sgn = abs(eta), (1.0 if eta >= 0 else -1.0)
    out = 0j
    if params.c1 != 0:
        if w < 0:
            # exp(-i pi k) * w^(k-1) = -(1 - eps eta^2)^(k-1) on the principal branch
            out += -params.c1 * sgn * _inner_scaled(r, eps, k)
        else:
            out += params.c1 * sgn * _outer_scaled(r, eps, k)
    if params.c2 != 0:
        out += params.c2 * principal_power(w, k - 1.0)
    return complex(out)


def hyper_field(x, t, params: ModelParams) -> complex:
    """T(x, t) = t^-1 f(x/t) for the hyperbolic-type family."""
    check_time(t)
    return hyper_profile(x / t, params) / t

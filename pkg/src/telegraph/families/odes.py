"""Reduction of the self-similar ansatz to an ordinary differential equation.

Substituting T = t^-alpha f(x / t^beta) into the PDE gives terms in
t^(-alpha-2) from the time derivatives and t^(-alpha-2 beta) from the
Laplacian, so an ODE in eta exists only for beta = 1. The reduced
equations are stored as Laurent polynomials in eta,

    p2(eta) f'' + p1(eta) f' + p0(eta) f = 0.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import UniversalityError
from .params import Family, ModelParams, resolve_alpha

__all__ = ["Variant", "Laurent", "ODECoefficients", "reduce_to_ode", "family_ode"]


class Variant(str, enum.Enum):
    OneD = "OneD"
    TwoD_L1 = "TwoD_L1"
    TwoD_Radial = "TwoD_Radial"
    SourceHarmonic = "SourceHarmonic"
    SourceCoulomb = "SourceCoulomb"


@dataclass(frozen=True)
class Laurent:
    """Finite Laurent polynomial ``sum c_n eta^n`` stored as {n: c_n}."""

    coeffs: dict = field(default_factory=dict)

    def __call__(self, eta):
        eta = np.asarray(eta, dtype=float)
        out = np.zeros_like(eta)
        for n, c in self.coeffs.items():
            if c != 0:
                out = out + c * eta ** n
        return out

    def coef(self, n) -> float:
        return self.coeffs.get(n, 0.0)

    def __repr__(self):
        terms = [f"{c:+.6g}*eta^{n}" for n, c in sorted(self.coeffs.items()) if c != 0]
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class ODECoefficients:
    """Coefficients of ``p2 f'' + p1 f' + p0 f = 0``.

    ``exact`` is False for equations that are not the true reduction of
    the PDE (the beta = 2 variant, and the 2D L1 equation in its printed
    form away from alpha = 1/2).
    """

    p2: Laurent
    p1: Laurent
    p0: Laurent
    alpha: float
    beta: float
    variant: Variant
    singular_points: tuple
    exact: bool = True

    def residual_terms(self, eta, f, df, d2f):
        return self.p2(eta) * d2f, self.p1(eta) * df, self.p0(eta) * f


def _need_beta_one(params, variant):
    if params.beta != 1:
        raise UniversalityError(
            f"{variant.value}: the time exponents -alpha-2 and -alpha-2*beta "
            f"match only for beta = 1, got beta = {params.beta:g}")


def _alpha(params, forced=None, name=""):
    if forced is not None:
        if params.alpha is not None and abs(params.alpha - forced) > 1e-12:
            raise UniversalityError(f"{name} forces alpha = {forced:g}, got {params.alpha:g}")
        return forced
    if params.alpha is None:
        raise UniversalityError(f"{name} needs an explicit alpha")
    return float(params.alpha)


def reduce_to_ode(params: ModelParams, variant) -> ODECoefficients:
    """Reduce the self-similar ansatz for ``variant`` to an ODE.

    Parameters
    ----------
    params : ModelParams
        ``alpha`` must be set for the free variants (OneD, TwoD_L1,
        TwoD_Radial); the source variants impose alpha = 2 (harmonic)
        and alpha = -1 (Coulomb) and reject a different explicit value.
    variant : Variant or str

    Returns
    -------
    ODECoefficients
        With ``alpha`` set to the value actually used.

    Raises
    ------
    UniversalityError
        If ``beta`` is not 1 (except the formal beta = 2 branch of TwoD_L1,
        which requires alpha = -2), or if alpha conflicts with a forced value.
    """
    variant = Variant(variant)
    eps, a = params.epsilon, params.a
    r1 = 1.0 / math.sqrt(eps)
    cone = (-r1, r1)
    if variant is Variant.TwoD_L1 and params.beta == 2:
        # formal beta = 2 equation; the time exponents do not balance, the
        # equation is kept for its Legendre structure with alpha = -2
        alpha = _alpha(params, -2.0, "TwoD_L1 with beta = 2")
        r2 = math.sqrt(2.0 / eps)
        return ODECoefficients(
            Laurent({2: eps, 0: -2.0}), Laurent({1: 3 * eps - a}), Laurent({0: 2 * (eps + a)}),
            alpha, 2.0, variant, (-r2, r2), exact=False)
    _need_beta_one(params, variant)
    if variant is Variant.OneD:
        al = _alpha(params, name="OneD")
        return ODECoefficients(
            Laurent({2: eps, 0: -1.0}), Laurent({1: 2 * eps * al + 2 * eps - a}),
            Laurent({0: al * (eps * al + eps - a)}), al, 1.0, variant, cone)
    if variant is Variant.TwoD_L1:
        # d2/dx2 + d2/dy2 of g((x+y)/t) is 2 g''/t^2
        al = _alpha(params, name="TwoD_L1")
        r2 = math.sqrt(2.0 / eps)
        return ODECoefficients(
            Laurent({2: eps, 0: -2.0}), Laurent({1: 2 * eps * al + 2 * eps - a}),
            Laurent({0: al * (eps * al + eps - a)}), al, 1.0, variant, (-r2, r2))
    if variant is Variant.TwoD_Radial:
        al = _alpha(params, name="TwoD_Radial")
        return ODECoefficients(
            Laurent({2: eps, 0: -1.0}), Laurent({1: 2 * eps * al + 2 * eps - a, -1: -1.0}),
            Laurent({0: al * (eps * al + eps - a)}), al, 1.0, variant, (0.0, r1))
    if variant is Variant.SourceHarmonic:
        # the source -D x^2 / t^4 balances t^-alpha-2 only for alpha = 2
        al = _alpha(params, 2.0, "SourceHarmonic")
        return ODECoefficients(
            Laurent({2: eps, 0: -1.0}), Laurent({1: 6 * eps - a}),
            Laurent({0: 6 * eps - 2 * a, 2: -params.D}), al, 1.0, variant, cone)
    if variant is Variant.SourceCoulomb:
        # the source -q / (x t) balances t^-alpha-2 only for alpha = -1
        al = _alpha(params, -1.0, "SourceCoulomb")
        return ODECoefficients(
            Laurent({2: eps, 0: -1.0}), Laurent({1: -a}),
            Laurent({0: a, -1: -params.q}), al, 1.0, variant, (-r1, 0.0, r1))
    raise AssertionError(variant)


_FAMILY_VARIANT = {
    Family.Compact1D: Variant.OneD,
    Family.Hyper1D: Variant.OneD,
    Family.LegendreRegular: Variant.OneD,
    Family.LegendreIrregular: Variant.OneD,
    Family.TwoD_L1_beta1: Variant.TwoD_L1,
    Family.TwoD_L1_beta2: Variant.TwoD_L1,
    Family.TwoD_Radial: Variant.TwoD_Radial,
    Family.SourceHarmonic: Variant.SourceHarmonic,
    Family.SourceCoulomb: Variant.SourceCoulomb,
}


def family_variant(family) -> Variant:
    return _FAMILY_VARIANT[Family.parse(family)]


def family_ode(family, params: ModelParams) -> ODECoefficients:
    """The ODE that the profile of ``family`` is constructed to solve.

    For every family but TwoD_L1_beta1 this is :func:`reduce_to_ode` with
    the family's exponents. The 2D L1 Legendre profile solves

        (eps eta^2 - 2) g'' + (3 eps - a) eta g' + alpha (alpha eps + eps - a) g = 0,

    whose first-derivative coefficient equals the true reduction
    (2 eps alpha + 2 eps - a) only at alpha = 1/2; ``exact`` records this.
    """
    family = Family.parse(family)
    alpha = resolve_alpha(family, params)
    beta = 2.0 if family is Family.TwoD_L1_beta2 else 1.0
    p = params.replace(alpha=alpha, beta=beta)
    if family is Family.TwoD_L1_beta1:
        eps, a = p.epsilon, p.a
        r2 = math.sqrt(2.0 / eps)
        return ODECoefficients(
            Laurent({2: eps, 0: -2.0}), Laurent({1: 3 * eps - a}),
            Laurent({0: alpha * (eps * alpha + eps - a)}), alpha, 1.0, Variant.TwoD_L1,
            (-r2, r2), exact=abs(alpha - 0.5) < 1e-15)
    return reduce_to_ode(p, _FAMILY_VARIANT[family])

"""Sampled profiles, spacetime fields and the heat-mass integral."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import integrate

from ..errors import (
    DivergenceError,
    ExponentError,
    NonIntegrableError,
    ParameterError,
    SingularityError,
)
from .legendre import (
    check_irregular_defined,
    legendre_irregular_profile,
    legendre_regular_degenerate,
    legendre_regular_profile,
)
from .odes import family_ode
from .onedim import compact_profile, hyper_profile
from .params import DELTA_SING, T_MIN, Branch, Family, FamilySpec, ModelParams, resolve_alpha
from .source import coulomb_profile, harmonic_profile
from .twodim import (
    order_o,
    order_omega,
    twod_l1_beta2_profile,
    twod_l1_profile,
    twod_radial_profile,
)

__all__ = [
    "VALID",
    "ZERO_EXTENSION",
    "EXCLUDED",
    "Profile",
    "SpacetimeField",
    "profile_value",
    "validate",
    "singular_points",
    "sample_profile",
    "field_value",
    "field_grid",
    "mass_integral",
    "PROJECTIONS",
    "project",
]

VALID, ZERO_EXTENSION, EXCLUDED = 0, 1, 2
MASK_NAMES = {VALID: "valid", ZERO_EXTENSION: "zero-extension", EXCLUDED: "excluded"}
PROJECTIONS = ("complex", "real-part", "magnitude")

_EVALUATORS = {
    Family.Compact1D: compact_profile,
    Family.Hyper1D: hyper_profile,
    Family.LegendreRegular: legendre_regular_profile,
    Family.LegendreIrregular: legendre_irregular_profile,
    Family.TwoD_L1_beta1: twod_l1_profile,
    Family.TwoD_L1_beta2: twod_l1_beta2_profile,
    Family.TwoD_Radial: twod_radial_profile,
    Family.SourceHarmonic: harmonic_profile,
    Family.SourceCoulomb: coulomb_profile,
}

# failures of a single sample that mean "outside the reach of this
# representation" rather than a bad parameter set
_SAMPLE_ERRORS = (ExponentError, SingularityError, DivergenceError)


def profile_value(family, eta, params: ModelParams) -> complex:
    """Evaluate the profile of ``family`` at one point."""
    return complex(_EVALUATORS[Family.parse(family)](eta, params))


def validate(family, params: ModelParams) -> float:
    """Check parameter-level preconditions; return the decay exponent."""
    family = Family.parse(family)
    alpha = resolve_alpha(family, params)
    if family is Family.TwoD_L1_beta1:
        order_omega(alpha, params.epsilon, params.a)
    elif family is Family.TwoD_L1_beta2:
        order_o(params.epsilon, params.a)
    elif family is Family.LegendreIrregular:
        check_irregular_defined(params)
    return alpha


def singular_points(family, params: ModelParams) -> tuple:
    """Points of the eta axis where the profile may not be evaluated.

    The zeros of the leading ODE coefficient, eta = 0 for the radial and
    Coulomb equations, and eta = 0 where an off-cut Q representation is
    used.
    """
    family = Family.parse(family)
    pts = set(family_ode(family, params).singular_points)
    if family is Family.LegendreIrregular:
        pts.add(0.0)
    if family in (Family.TwoD_L1_beta1, Family.TwoD_L1_beta2) and params.c2 != 0:
        pts.add(0.0)
    return tuple(sorted(pts))


def project(values, mode: str = "real-part"):
    """Presentation projection of complex values."""
    values = np.asarray(values)
    if mode == "complex":
        return values
    if mode == "real-part":
        return np.real(values)
    if mode == "magnitude":
        return np.abs(values)
    raise ParameterError(f"projection must be one of {PROJECTIONS}")


def _branch(eta, eps) -> Branch:
    if eps * eta * eta < 1.0:
        return Branch.Inner
    return Branch.Left if eta < 0 else Branch.Right


@dataclass(frozen=True)
class Profile:
    """A similarity profile sampled on a strictly increasing grid.

    ``value`` is NaN where ``mask`` is EXCLUDED and 0 on ZERO_EXTENSION.
    """

    family: Family
    params: ModelParams
    eta: np.ndarray
    value: np.ndarray
    mask: np.ndarray
    branch: Optional[Branch] = None
    degenerate: bool = False
    notes: tuple = field(default_factory=tuple)

    @property
    def valid(self) -> np.ndarray:
        return self.mask == VALID

    @property
    def masked_fraction(self) -> float:
        return float(np.mean(self.mask == EXCLUDED)) if self.mask.size else 0.0

    def projected(self, mode: str = "real-part"):
        return project(self.value, mode)


def sample_profile(family, params: ModelParams, eta, branch=None,
                   delta: float = DELTA_SING) -> Profile:
    """Evaluate a profile on a grid with the singular-band mask applied.

    Samples within ``delta`` of a singular point, outside the requested
    branch, or outside the reach of the series representation are
    EXCLUDED. The compact profile outside its support is ZERO_EXTENSION.
    """
    family = Family.parse(family)
    validate(family, params)
    eta = np.asarray(eta, dtype=float)
    if eta.ndim != 1 or (eta.size > 1 and np.any(np.diff(eta) <= 0)):
        raise ParameterError("eta samples must be a strictly increasing 1-D grid")
    branch = Branch(branch) if branch is not None else None
    eps = params.epsilon
    sing = np.array(singular_points(family, params))
    value = np.full(eta.shape, np.nan + 0j, dtype=complex)
    mask = np.full(eta.shape, EXCLUDED, dtype=np.int8)
    degenerate = family is Family.LegendreRegular and legendre_regular_degenerate(params)
    fn = _EVALUATORS[family]
    for i, e in enumerate(eta):
        if sing.size and np.min(np.abs(e - sing)) < delta:
            continue
        if branch is not None and _branch(e, eps) is not branch:
            continue
        if family is Family.Compact1D and branch is None and eps * e * e > 1.0:
            value[i], mask[i] = 0.0, ZERO_EXTENSION
            continue
        try:
            if family is Family.Compact1D:
                v = compact_profile(e, params, branch)
            else:
                v = fn(e, params)
        except _SAMPLE_ERRORS:
            continue
        except ParameterError as exc:
            # logarithmic hypergeometric cases are out of reach, not fatal
            if "logarithmic" not in str(exc):
                raise
            continue
        value[i], mask[i] = v, VALID
    return Profile(family, params, eta, value, mask, branch, degenerate)


# ------------------------------------------------------------------ fields


def _eta_of(family, x, t, y):
    if family in (Family.TwoD_L1_beta1,):
        return (x + y) / t
    if family is Family.TwoD_L1_beta2:
        return (x + y) / (t * t)
    if family is Family.TwoD_Radial:
        return math.hypot(x, y) / t
    return x / t


def field_value(family, params: ModelParams, x, t, y: float = 0.0,
                t_min: float = T_MIN) -> complex:
    """T(x, t) (or S(x, y, t) for 2D families) = t^-alpha f(eta)."""
    family = Family.parse(family)
    alpha = resolve_alpha(family, params)
    x, t, y = float(x), float(t), float(y)
    if t < t_min:
        raise ParameterError(f"fields are evaluated for t >= {t_min:g}")
    return t ** -alpha * profile_value(family, _eta_of(family, x, t, y), params)


@dataclass(frozen=True)
class SpacetimeField:
    """Field values on a rectangular (t, x) grid; ``values[i, j]`` is at (t[i], x[j])."""

    family: Family
    params: ModelParams
    x: np.ndarray
    t: np.ndarray
    values: np.ndarray
    mask: np.ndarray
    y: float = 0.0


def field_grid(family, params: ModelParams, x, t, y: float = 0.0,
               delta: float = DELTA_SING, t_min: float = T_MIN) -> SpacetimeField:
    """Evaluate a field on the grid ``t x x`` with masked similarity points."""
    family = Family.parse(family)
    alpha = validate(family, params)
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(t < t_min):
        raise ParameterError(f"fields are evaluated for t >= {t_min:g}")
    sing = np.array(singular_points(family, params))
    values = np.full((t.size, x.size), np.nan + 0j, dtype=complex)
    mask = np.full((t.size, x.size), EXCLUDED, dtype=np.int8)
    for i, ti in enumerate(t):
        for j, xj in enumerate(x):
            e = _eta_of(family, xj, ti, y)
            if sing.size and np.min(np.abs(e - sing)) < delta:
                continue
            if family is Family.Compact1D and params.epsilon * e * e > 1.0:
                values[i, j], mask[i, j] = 0.0, ZERO_EXTENSION
                continue
            try:
                v = profile_value(family, e, params)
            except _SAMPLE_ERRORS:
                continue
            except ParameterError as exc:
                if "logarithmic" not in str(exc):
                    raise
                continue
            values[i, j], mask[i, j] = ti ** -alpha * v, VALID
    return SpacetimeField(family, params, x, t, values, mask, y)


# -------------------------------------------------------------------- mass


def mass_integral(profile: Profile, tol: float = 1e-10) -> float:
    """Integral of the real part of the profile over its sampled eta range.

    Adaptive quadrature (scipy ``quad``) of the analytic profile, split at
    singular points; zero-extension regions contribute nothing.

    Raises
    ------
    NonIntegrableError
        If an endpoint singularity has exponent <= -1 or the quadrature
        does not converge.
    """
    fam, p = profile.family, profile.params
    lo, hi = float(profile.eta[0]), float(profile.eta[-1])
    if fam is Family.Compact1D:
        edge = 1.0 / math.sqrt(p.epsilon)
        if p.k - 1.0 <= -1.0:
            raise NonIntegrableError("edge exponent k - 1 <= -1: the profile is not integrable")
        if profile.branch in (None, Branch.Inner):
            lo, hi = max(lo, -edge), min(hi, edge)
    if fam is Family.LegendreRegular and profile.degenerate:
        return 0.0
    if hi <= lo:
        return 0.0
    cuts = [s for s in singular_points(fam, p) if lo < s < hi]
    pts = [lo] + cuts + [hi]

    def f(e):
        if fam is Family.Compact1D:
            return compact_profile(e, p, profile.branch) if p.epsilon * e * e != 1 or p.k > 1 else 0.0
        return profile_value(fam, e, p).real

    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        try:
            val, err = integrate.quad(f, a, b, epsabs=tol, epsrel=tol, limit=200)
        except (ExponentError, SingularityError, DivergenceError) as exc:
            raise NonIntegrableError(str(exc)) from exc
        if not math.isfinite(val) or err > 1e3 * max(tol, tol * abs(val)):
            raise NonIntegrableError(f"quadrature did not converge on [{a:g}, {b:g}]")
        total += val
    return total

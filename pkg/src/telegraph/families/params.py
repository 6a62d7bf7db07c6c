"""Model parameters and family identification."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Optional

from ..errors import ParameterError, UniversalityError

__all__ = [
    "ModelParams",
    "Family",
    "Branch",
    "FamilySpec",
    "FORCED_ALPHA",
    "FAMILY_BETA",
    "resolve_alpha",
]

#: width of the masked band around every singular point of a profile
DELTA_SING = 1e-3
#: earliest time at which fields are evaluated; the damping a/t is singular at 0
T_MIN = 1.0


class Family(str, enum.Enum):
    """The nine solution families."""

    Compact1D = "Compact1D"
    Hyper1D = "Hyper1D"
    LegendreRegular = "LegendreRegular"
    LegendreIrregular = "LegendreIrregular"
    TwoD_L1_beta1 = "TwoD_L1_beta1"
    TwoD_L1_beta2 = "TwoD_L1_beta2"
    TwoD_Radial = "TwoD_Radial"
    SourceHarmonic = "SourceHarmonic"
    SourceCoulomb = "SourceCoulomb"

    @classmethod
    def parse(cls, name) -> "Family":
        if isinstance(name, cls):
            return name
        key = str(name).replace("-", "_").lower()
        for f in cls:
            if f.value.lower() == key:
                return f
        raise ParameterError(f"unknown family {name!r}")


class Branch(str, enum.Enum):
    """Interval of the similarity variable relative to the light cone."""

    Inner = "Inner"
    Left = "Left"
    Right = "Right"


# decay exponent fixed by the structure of each family; None means free
FORCED_ALPHA = {
    Family.Compact1D: 1.0,
    Family.Hyper1D: 1.0,
    Family.LegendreRegular: -2.0,
    Family.LegendreIrregular: -2.0,
    Family.TwoD_L1_beta1: None,
    Family.TwoD_L1_beta2: -2.0,
    Family.TwoD_Radial: None,
    Family.SourceHarmonic: 2.0,
    Family.SourceCoulomb: -1.0,
}

FAMILY_BETA = {f: (2.0 if f is Family.TwoD_L1_beta2 else 1.0) for f in Family}


@dataclass(frozen=True)
class ModelParams:
    """Physical and similarity parameters.

    Attributes
    ----------
    epsilon : float
        Inverse squared propagation speed, must be positive.
    a : float
        Damping strength in the a/t term.
    alpha : float or None
        Decay exponent. ``None`` lets a family impose its forced value.
    beta : float
        Spreading exponent, 1 or 2.
    D : float
        Oscillator stiffness of the harmonic source, non-negative.
    q : float
        Charge of the Coulomb source.
    c1, c2 : float
        Integration constants.
    """

    epsilon: float = 1.0
    a: float = 4.0
    alpha: Optional[float] = None
    beta: float = 1.0
    D: float = 0.0
    q: float = 0.0
    c1: float = 1.0
    c2: float = 0.0

    def __post_init__(self):
        for name in ("epsilon", "a", "beta", "D", "q", "c1", "c2"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ParameterError(f"{name} must be a finite real number")
        if self.alpha is not None and not math.isfinite(self.alpha):
            raise ParameterError("alpha must be finite")
        if self.epsilon <= 0:
            raise ParameterError("epsilon must be positive")
        if self.beta not in (1, 2):
            raise ParameterError("beta must be 1 or 2")
        if self.D < 0:
            raise ParameterError("D must be non-negative")

    @property
    def k(self) -> float:
        """The recurring ratio a / (2 epsilon)."""
        return self.a / (2.0 * self.epsilon)

    @property
    def speed(self) -> float:
        """Propagation speed 1/sqrt(epsilon)."""
        return 1.0 / math.sqrt(self.epsilon)

    def replace(self, **kw) -> "ModelParams":
        return replace(self, **kw)


@dataclass(frozen=True)
class FamilySpec:
    """A family together with an optional branch interval."""

    family: Family
    branch: Optional[Branch] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if self.branch is not None:
            object.__setattr__(self, "branch", Branch(self.branch))


def resolve_alpha(family, params: ModelParams) -> float:
    """Decay exponent used by ``family`` for ``params``.

    Raises UniversalityError when a family with a forced exponent is
    given a different one, or a free family is given none.
    """
    family = Family.parse(family)
    forced = FORCED_ALPHA[family]
    if forced is None:
        if params.alpha is None:
            raise UniversalityError(f"{family.value} needs an explicit alpha")
        return float(params.alpha)
    if params.alpha is not None and abs(params.alpha - forced) > 1e-12:
        raise UniversalityError(
            f"{family.value} forces alpha = {forced:g}, got {params.alpha:g}")
    return forced

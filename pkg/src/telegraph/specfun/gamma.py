"""Complex Gamma function (Lanczos approximation with reflection)."""
from __future__ import annotations

import cmath
import math

from ..errors import PoleError
from ._cplx import nonpos_int, sinpi

# g = 7, n = 9
_G = 7.0
_P = (
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _lanczos(z: complex) -> complex:
    z = z - 1.0
    x = _P[0]
    for i in range(1, len(_P)):
        x += _P[i] / (z + i)
    t = z + _G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


def gamma(z) -> complex:
    """Gamma function of a complex argument.

    Uses the reflection formula for Re z < 1/2. Relative accuracy is
    about 1e-15 for moderate |z|; it degrades only through the
    exponential for |z| beyond ~100.

    Raises
    ------
    PoleError
        If ``z`` is a non-positive integer.
    """
    z = complex(z)
    if nonpos_int(z) is not None:
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return math.pi / (sinpi(z) * _lanczos(1.0 - z))
    return _lanczos(z)


def rgamma(z) -> complex:
    """Reciprocal Gamma function, entire: 0 at the poles of Gamma."""
    z = complex(z)
    if nonpos_int(z) is not None:
        return 0j
    if z.real < 0.5:
        return sinpi(z) * _lanczos(1.0 - z) / math.pi
    return 1.0 / _lanczos(z)


def gamma_ratio(num, den) -> complex:
    """prod Gamma(num) / prod Gamma(den); zero if a denominator poles.

    Raises PoleError if a numerator argument is a pole.
    """
    out = 1.0 + 0j
    for z in num:
        out *= gamma(z)
    for z in den:
        out *= rgamma(z)
    return out

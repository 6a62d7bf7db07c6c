"""Gauss hypergeometric function 2F1(a, b; c; z).

Evaluation strategy, in order:

1. exact termination when ``a`` or ``b`` is a non-positive integer;
2. exact termination after Euler's transformation when ``c - a`` or
   ``c - b`` is a non-positive integer;
3. the direct power series for ``|z| <= 0.9``;
4. otherwise the linear transformation (z/(z-1), 1-z, 1/z, 1/(1-z),
   1-1/z) with the smallest admissible image, summed as a power series.

Real ``z > 1`` lies on the branch cut; it is evaluated as the limit from
below, ``z - i0``, which is also what mpmath returns.
"""
from __future__ import annotations

from ..errors import DivergenceError, ParameterError
from ._cplx import near_int, nonpos_int, pochhammer, principal_power
from .gamma import gamma, rgamma

#: distance kept from the unit circle by every series evaluation
DELTA_SERIES = 0.05
DIRECT_RADIUS = 0.9
_REL_TOL = 1e-16
_MAX_TERMS = 20000

__all__ = [
    "DELTA_SERIES",
    "gauss_2f1",
    "gauss_2f1_regularized",
    "gauss_2f1_contiguous",
    "contiguous_middle",
    "gauss_2f1_series",
]


def _terminating(a, b, c, z, n):
    """Finite sum of the first ``n + 1`` terms."""
    s = t = 1.0 + 0j
    for k in range(n):
        t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        s += t
    return s


def gauss_2f1_series(a, b, c, z, radius=1.0 - DELTA_SERIES):
    """Sum the defining power series directly.

    Stops when the geometric tail estimate falls below 1e-16 of the
    partial sum. Refuses ``|z| > radius``.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if abs(z) > radius:
        raise DivergenceError(f"|z| = {abs(z):.6g} outside series radius {radius:g}")
    if z == 0:
        return 1.0 + 0j
    for p in (a, b):
        n = nonpos_int(p)
        if n is not None:
            return _terminating(a, b, c, z, -n)
    if nonpos_int(c) is not None:
        raise ParameterError("c is a non-positive integer and the series does not terminate")
    s = t = 1.0 + 0j
    az = abs(z)
    for k in range(_MAX_TERMS):
        t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        s += t
        if t == 0:
            return s
        # term ratio tends to |z|; bound the tail by a geometric series once
        # the ratio has settled below one
        ratio = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2.0))) * az
        if ratio < 1.0 and abs(t) * ratio / (1.0 - ratio) <= _REL_TOL * abs(s):
            return s
    raise DivergenceError("2F1 series did not converge")


def _transforms(a, b, c, z):
    """Yield (|w|, name) for each transformation admissible here."""
    cab_int = near_int(c - a - b) is not None
    ab_int = near_int(a - b) is not None
    out = []
    if z != 1:
        out.append((abs(z / (z - 1)), "pfaff"))
        if not cab_int:
            out.append((abs(1 - z), "one_minus"))
        if not ab_int:
            out.append((abs(1 / (1 - z)), "inv_one_minus"))
    if z != 0:
        if not ab_int:
            out.append((abs(1 / z), "inv"))
        if not cab_int:
            out.append((abs(1 - 1 / z), "one_minus_inv"))
    return sorted(out)


def _apply(name, a, b, c, z):
    F = gauss_2f1_series
    if name == "pfaff":
        return principal_power(1 - z, -a) * F(a, c - b, c, z / (z - 1))
    if name == "one_minus":
        w = 1 - z
        t1 = gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
        t2 = gamma(c) * gamma(a + b - c) * rgamma(a) * rgamma(b)
        out = 0j
        if t1 != 0:
            out += t1 * F(a, b, a + b - c + 1, w)
        if t2 != 0:
            out += t2 * principal_power(w, c - a - b) * F(c - a, c - b, c - a - b + 1, w)
        return out
    if name == "inv":
        w = 1 / z
        out = 0j
        for p, q in ((a, b), (b, a)):
            coef = gamma(c) * gamma(q - p) * rgamma(q) * rgamma(c - p)
            if coef != 0:
                out += coef * principal_power(-z, -p) * F(p, p - c + 1, p - q + 1, w)
        return out
    if name == "inv_one_minus":
        w = 1 / (1 - z)
        out = 0j
        for p, q in ((a, b), (b, a)):
            coef = gamma(c) * gamma(q - p) * rgamma(q) * rgamma(c - p)
            if coef != 0:
                out += coef * principal_power(1 - z, -p) * F(p, c - q, p - q + 1, w)
        return out
    if name == "one_minus_inv":
        w = 1 - 1 / z
        t1 = gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
        t2 = gamma(c) * gamma(a + b - c) * rgamma(a) * rgamma(b)
        out = 0j
        if t1 != 0:
            out += t1 * principal_power(z, -a) * F(a, a - c + 1, a + b - c + 1, w)
        if t2 != 0:
            out += (t2 * principal_power(1 - z, c - a - b) * principal_power(z, a - c)
                    * F(c - a, 1 - a, c - a - b + 1, w))
        return out
    raise AssertionError(name)


def gauss_2f1(a, b, c, z) -> complex:
    """Gauss hypergeometric function 2F1(a, b; c; z).

    Parameters
    ----------
    a, b, c : complex
        Parameters. ``c`` may be a non-positive integer only when the
        series terminates first.
    z : complex
        Argument. Real ``z > 1`` is taken as ``z - i0``.

    Returns
    -------
    complex

    Raises
    ------
    ParameterError
        On a pole in ``c`` without earlier termination, or when the only
        transformation that reaches ``z`` hits a logarithmic case.
    DivergenceError
        If no admissible transformation maps ``z`` into the series disk.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if z == 0:
        return 1.0 + 0j
    mc = nonpos_int(c)
    # 1. direct termination
    ns = [n for n in (nonpos_int(a), nonpos_int(b)) if n is not None]
    if ns:
        n = max(ns)  # closest to zero terminates first
        if mc is None or mc < n:
            return _terminating(a, b, c, z, -n)
    if mc is not None:
        raise ParameterError(f"2F1 undefined: c = {mc} is a pole and the series does not terminate")
    # 2. termination after Euler's transformation
    ns = [n for n in (nonpos_int(c - a), nonpos_int(c - b)) if n is not None]
    if ns:
        if z == 1:
            raise ParameterError("2F1 at z = 1 diverges here")
        n = max(ns)
        return principal_power(1 - z, c - a - b) * _terminating(c - a, c - b, c, z, -n)
    # 3. direct series
    if abs(z) <= DIRECT_RADIUS:
        # on the negative half plane the Pfaff image is smaller and the
        # alternating series loses less to cancellation
        if z.real < 0 and abs(z / (z - 1)) < abs(z):
            return _apply("pfaff", a, b, c, z)
        return gauss_2f1_series(a, b, c, z)
    # 4. transformations
    cands = _transforms(a, b, c, z)
    limit = 1.0 - DELTA_SERIES
    if cands and cands[0][0] <= limit:
        return _apply(cands[0][1], a, b, c, z)
    if abs(z) <= limit:
        return gauss_2f1_series(a, b, c, z)
    degenerate = near_int(c - a - b) is not None or near_int(a - b) is not None
    if degenerate:
        raise ParameterError(
            "2F1 near this z needs a logarithmic connection formula (integer "
            "parameter difference), which is not implemented")
    raise DivergenceError(f"no transformation brings z = {z} inside the series disk")


def gauss_2f1_regularized(a, b, c, z) -> complex:
    """Regularized 2F1(a, b; c; z) / Gamma(c), entire in ``c``."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    mc = nonpos_int(c)
    if mc is None:
        return rgamma(c) * gauss_2f1(a, b, c, z)
    m = -mc
    coef = pochhammer(a, m + 1) * pochhammer(b, m + 1) / gamma(m + 2)
    if coef == 0:
        return 0j
    return coef * z ** (m + 1) * gauss_2f1(a + m + 1, b + m + 1, m + 2, z)


def gauss_2f1_contiguous(a, b, c, z, f_am1, f_a) -> complex:
    """Return 2F1(a+1, b; c; z) from 2F1(a-1, ...) and 2F1(a, ...).

    Solves the three-term relation
    ``(c-a) F(a-1) + (2a - c + (b-a) z) F(a) + a (z-1) F(a+1) = 0``.
    For b = 1 the middle coefficient is often written 2a - c - a z + z.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    den = a * (z - 1)
    if den == 0:
        raise ParameterError("contiguous relation is singular for a = 0 or z = 1")
    return -((c - a) * f_am1 + contiguous_middle(a, b, c, z) * f_a) / den


def contiguous_middle(a, b, c, z) -> complex:
    """Middle coefficient 2a - c + (b - a) z of the contiguous relation in a."""
    return 2 * a - c + (b - a) * z

"""Principal-branch complex helpers used throughout the kernel."""
from __future__ import annotations

import cmath
import math

INT_TOL = 1e-12


def as_complex(x) -> complex:
    """Convert to complex, folding a negative-zero imaginary part to +0.

    Real arguments on a branch cut must resolve to the upper lip
    (arg = +pi) regardless of how the zero was produced.
    """
    z = complex(x)
    return complex(z.real, z.imag + 0.0)


def principal_log(z) -> complex:
    return cmath.log(as_complex(z))


def principal_power(base, p) -> complex:
    """``base**p`` on the principal branch, arg(base) in (-pi, pi].

    ``0**p`` is 0 for Re p > 0 and 1 for p == 0.
    """
    b = as_complex(base)
    p = complex(p)
    if b == 0:
        if p == 0:
            return 1.0 + 0j
        if p.real > 0:
            return 0j
        raise ZeroDivisionError("0 raised to a power with non-positive real part")
    if b.imag == 0 and b.real > 0 and p.imag == 0:
        return complex(b.real ** p.real)
    if p.imag == 0 and float(p.real).is_integer() and abs(p.real) <= 64:
        # exact for integer exponents; avoids spurious imaginary parts
        return b ** int(p.real)
    return cmath.exp(p * cmath.log(b))


def nonpos_int(x) -> int | None:
    """Return ``n`` if ``x`` is (within tolerance) the integer ``n <= 0``."""
    z = complex(x)
    if z.imag != 0:
        return None
    r = round(z.real)
    if r <= 0 and abs(z.real - r) <= INT_TOL * max(1.0, abs(z.real)):
        return int(r)
    return None


def near_int(x) -> int | None:
    z = complex(x)
    if z.imag != 0:
        return None
    r = round(z.real)
    if abs(z.real - r) <= INT_TOL * max(1.0, abs(z.real)):
        return int(r)
    return None


def sinpi(z) -> complex:
    """sin(pi z) with the argument reduced exactly first."""
    z = complex(z)
    n = round(z.real)
    w = complex(z.real - n, z.imag)
    s = cmath.sin(math.pi * w)
    return -s if n % 2 else s


def cospi(z) -> complex:
    z = complex(z)
    n = round(z.real)
    w = complex(z.real - n, z.imag)
    c = cmath.cos(math.pi * w)
    return -c if n % 2 else c


def expipi(p) -> complex:
    """exp(i pi p) for real ``p``, exact at (half-)integers."""
    return complex(cospi(p).real, sinpi(p).real) if complex(p).imag == 0 \
        else cmath.exp(1j * math.pi * complex(p))


def pochhammer(x, n: int) -> complex:
    out = 1.0 + 0j
    x = complex(x)
    for j in range(n):
        out *= x + j
    return out

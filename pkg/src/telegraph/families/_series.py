"""Small helpers shared by the family evaluators."""
from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError
from .params import T_MIN


def poch_ratio(x: float, n: int) -> np.ndarray:
    """(x)_j / j! for j = 0..n-1."""
    j = np.arange(n, dtype=float)
    r = np.ones(n)
    if n > 1:
        r[1:] = np.cumprod((x + j[:-1]) / (j[:-1] + 1.0))
    return r


def is_zero(p: float, tol: float = 1e-12) -> bool:
    return abs(p) <= tol


def check_time(t, t_min: float = T_MIN):
    t = np.asarray(t, dtype=float)
    if np.any(t < t_min):
        raise ParameterError(f"fields are evaluated for t >= {t_min:g}")


def sqrt_eps(params) -> float:
    return math.sqrt(params.epsilon)

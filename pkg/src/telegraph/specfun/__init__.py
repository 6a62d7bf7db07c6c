"""Special-function kernel: Gamma, 2F1, associated Legendre, Heun."""
from ._cplx import principal_power
from .gamma import gamma, gamma_ratio, rgamma
from .hypergeometric import (
    DELTA_SERIES,
    gauss_2f1,
    contiguous_middle,
    gauss_2f1_contiguous,
    gauss_2f1_regularized,
    gauss_2f1_series,
)
from .legendre import legendre_orthogonality_integral, legendre_p, legendre_q
from .heun import heun_c, heun_c_coefficients, heun_g, heun_g_coefficients

__all__ = [
    "DELTA_SERIES",
    "gamma",
    "rgamma",
    "gamma_ratio",
    "principal_power",
    "gauss_2f1",
    "gauss_2f1_series",
    "gauss_2f1_regularized",
    "gauss_2f1_contiguous",
    "contiguous_middle",
    "legendre_p",
    "legendre_q",
    "legendre_orthogonality_integral",
    "heun_c",
    "heun_c_coefficients",
    "heun_g",
    "heun_g_coefficients",
]

import math

import numpy as np
import pytest
import sympy as sp
from numpy.testing import assert_allclose

from telegraph.errors import (
    ComplexOrderError,
    ExponentError,
    NonIntegrableError,
    ParameterError,
    SingularityError,
    UndefinedError,
    UniversalityError,
)
from telegraph.families import (
    EXCLUDED,
    GOLDEN_ALPHA,
    VALID,
    ZERO_EXTENSION,
    Branch,
    Family,
    ModelParams,
    Variant,
    branch_identity,
    compact_field,
    compact_profile,
    coulomb_profile,
    family_ode,
    field_grid,
    field_value,
    harmonic_profile,
    hyper_field,
    hyper_profile,
    legendre_field,
    legendre_irregular_closed_form,
    legendre_irregular_profile,
    legendre_regular_closed_form,
    legendre_regular_printed_form,
    legendre_regular_profile,
    mass_integral,
    omega_first_group,
    order_o,
    order_omega,
    reduce_to_ode,
    resolve_alpha,
    sample_profile,
    travelling_wave_factorization,
    twod_l1_beta2_profile,
    twod_radial_profile,
)
from telegraph.specfun import gamma, gauss_2f1, legendre_q
from telegraph.verify import ode_residual_of


def residual(fn, ode, eta, h=1e-4):
    return ode_residual_of(fn, ode, np.atleast_1d(eta), h).max_rel_residual


# ------------------------------------------------------------------ params


def test_model_params_validation():
    with pytest.raises(ParameterError):
        ModelParams(epsilon=0)
    with pytest.raises(ParameterError):
        ModelParams(beta=3)
    with pytest.raises(ParameterError):
        ModelParams(D=-1)
    assert ModelParams(epsilon=2, a=6).k == 1.5


def test_family_parse():
    assert Family.parse("compact1d") is Family.Compact1D
    assert Family.parse("twod-l1-beta2") is Family.TwoD_L1_beta2
    with pytest.raises(ParameterError):
        Family.parse("nope")


def test_forced_alpha():
    assert resolve_alpha(Family.SourceHarmonic, ModelParams()) == 2
    assert resolve_alpha(Family.SourceCoulomb, ModelParams()) == -1
    with pytest.raises(UniversalityError):
        resolve_alpha(Family.Compact1D, ModelParams(alpha=2))
    with pytest.raises(UniversalityError):
        resolve_alpha(Family.TwoD_Radial, ModelParams())


# -------------------------------------------------------------------- ODEs


def test_reduce_examples():
    ode = reduce_to_ode(ModelParams(epsilon=1, a=4, alpha=1), Variant.OneD)
    assert ode.p2(2.0) == 3.0 and ode.p1(2.0) == 0.0 and ode.p0(2.0) == -2.0
    ode = reduce_to_ode(ModelParams(epsilon=1, a=1, alpha=-2), Variant.OneD)
    assert ode.p1(1.0) == -3.0 and ode.p0(1.0) == 4.0
    with pytest.raises(UniversalityError):
        reduce_to_ode(ModelParams(alpha=1, beta=2), Variant.OneD)
    with pytest.raises(UniversalityError):
        reduce_to_ode(ModelParams(alpha=1), Variant.SourceHarmonic)
    assert reduce_to_ode(ModelParams(), Variant.SourceCoulomb).alpha == -1


def _symbolic_reduction(variant, eps, a, alpha, D=0, q=0):
    """Substitute the ansatz into the PDE with sympy; return (p2, p1, p0) at eta."""
    x, y, t, eta = sp.symbols("x y t eta", positive=True)
    f = sp.Function("f")
    if variant is Variant.TwoD_L1:
        arg = (x + y) / t
        U = t ** -alpha * f(arg)
        lap = sp.diff(U, x, 2) + sp.diff(U, y, 2)
    elif variant is Variant.TwoD_Radial:
        arg = x / t
        U = t ** -alpha * f(arg)
        lap = sp.diff(U, x, 2) + sp.diff(U, x) / x
    else:
        arg = x / t
        U = t ** -alpha * f(arg)
        lap = sp.diff(U, x, 2)
    expr = eps * sp.diff(U, t, 2) + a / t * sp.diff(U, t) - lap
    if variant is Variant.SourceHarmonic:
        expr -= D * x ** 2 / t ** 4 * U
    if variant is Variant.SourceCoulomb:
        expr -= q / (x * t) * U
    expr = sp.expand(expr * t ** (alpha + 2))
    if variant is Variant.TwoD_L1:
        expr = expr.subs(x, eta * t - y)
    else:
        expr = expr.subs(x, eta * t)
    expr = sp.simplify(expr.doit())
    F0, F1, F2 = sp.symbols("F0 F1 F2")
    arg_e = eta
    expr = expr.subs(sp.Derivative(f(arg_e), (arg_e, 2)), F2)
    expr = expr.replace(lambda e: isinstance(e, sp.Subs), lambda e: e.doit())
    expr = expr.subs({sp.Derivative(f(arg_e), (arg_e, 2)): F2})
    expr = expr.subs({sp.Derivative(f(arg_e), arg_e): F1})
    expr = expr.subs({f(arg_e): F0})
    expr = sp.expand(expr)
    assert expr.free_symbols <= {eta, F0, F1, F2}
    return [sp.lambdify(eta, expr.coeff(F)) for F in (F2, F1, F0)]


@pytest.mark.parametrize("variant,eps,a,alpha,D,q", [
    (Variant.OneD, 1.5, 2.5, 0.7, 0, 0),
    (Variant.TwoD_L1, 2.0, 3.0, 0.4, 0, 0),
    (Variant.TwoD_Radial, 0.5, 1.5, 1.2, 0, 0),
    (Variant.SourceHarmonic, 1.5, 2.0, 2, 0.7, 0),
    (Variant.SourceCoulomb, 2.0, 1.5, -1, 0, 0.9),
])
def test_reduce_matches_symbolic(variant, eps, a, alpha, D, q):
    p = ModelParams(epsilon=eps, a=a, alpha=alpha, D=D, q=q)
    ode = reduce_to_ode(p, variant)
    s2, s1, s0 = _symbolic_reduction(variant, sp.Rational(str(eps)), sp.Rational(str(a)),
                                      sp.Rational(str(alpha)), sp.Rational(str(D)), sp.Rational(str(q)))
    for e in (0.3, 0.8, 1.7):
        assert_allclose([ode.p2(e), ode.p1(e), ode.p0(e)], [float(s2(e)), float(s1(e)), float(s0(e))],
                        rtol=1e-13, atol=1e-13)


def test_universality_forced_pairs():
    for fam in Family:
        p = ModelParams(alpha=0.37)
        if fam in (Family.TwoD_Radial, Family.TwoD_L1_beta1):
            continue
        with pytest.raises(UniversalityError):
            resolve_alpha(fam, p)


# ------------------------------------------------------------------ compact


def test_compact_examples():
    p = ModelParams(epsilon=1, a=4)
    assert compact_profile(0.0, p) == 1
    assert compact_profile(0.5, p) == 0.75
    assert compact_profile(1.5, p) == 0
    assert compact_field(0, 1, p) == 1
    assert compact_field(0, 2, p) == 0.5
    assert compact_field(3, 1, p) == 0
    for e in (-0.3, 0.2, 0.9):
        assert compact_profile(e, ModelParams(epsilon=2.3, a=1.7)) == pytest.approx(
            (1 - 2.3 * e * e) ** (1.7 / 4.6 - 1) if 2.3 * e * e < 1 else 0.0)


def test_compact_edge_exponent_error():
    with pytest.raises(ExponentError):
        compact_profile(1.0, ModelParams(epsilon=1, a=1))
    assert compact_profile(2.0, ModelParams(a=6), Branch.Right) == pytest.approx(9.0)


def test_compact_time_floor():
    with pytest.raises(ParameterError):
        compact_field(0, 0.5, ModelParams())


# -------------------------------------------------------------------- hyper


def test_hyper_examples():
    p = ModelParams(epsilon=1, a=4, c1=1, c2=0)
    assert hyper_profile(0.0, p) == 0
    q = ModelParams(epsilon=1, a=4, c1=0, c2=1)
    assert_allclose(hyper_profile(0.5, q), -0.75, rtol=1e-15)
    for e in (0.2, 0.7, 1.3, 2.5, 6.0):
        assert_allclose(hyper_profile(-e, p), -hyper_profile(e, p), rtol=1e-12, atol=1e-300)
    assert hyper_field(0, 1, p) == 0
    far = [abs(hyper_field(x, 1.0, p)) for x in (2.0, 10.0, 40.0, 160.0)]
    assert far == sorted(far, reverse=True) and far[-1] < 1e-2


@pytest.mark.parametrize("eps,a", [(1, 4), (1, 3), (2, 1), (0.5, -1), (1, 0), (1, -3)])
def test_hyper_first_order_ode(eps, a):
    # eps (eta^2 f)' - a eta f = f' + c1 on each branch interval
    p = ModelParams(epsilon=eps, a=a, c1=1.0, c2=0.4)
    r = 1 / math.sqrt(eps)
    h = 1e-5
    for e in np.r_[np.linspace(-0.9, 0.9, 7), np.linspace(1.1, 3.0, 5), -np.linspace(1.1, 3.0, 5)] * r:
        f = hyper_profile(e, p)
        df = (hyper_profile(e + h, p) - hyper_profile(e - h, p)) / (2 * h)
        lhs = eps * (2 * e * f + e * e * df) - a * e * f
        rhs = df + p.c1
        scale = abs(eps * e * e * df) + abs(df) + abs(a * e * f) + 1
        assert abs(lhs - rhs) / scale < 1e-7, (eps, a, e)


def test_hyper_matches_hypergeometric_inside():
    # inside the cone the c1 term is -sgn(...) eta 2F1(1/2, k; 3/2; eps eta^2)(1 - eps eta^2)^(k-1)
    # up to the branch sign; compare magnitudes against the direct series
    p = ModelParams(epsilon=1, a=3, c1=1, c2=0)
    for e in (0.1, 0.4, 0.6):
        ref = e * gauss_2f1(0.5, 1.5, 1.5, e * e) * (1 - e * e) ** 0.5
        assert_allclose(abs(hyper_profile(e, p)), abs(ref), rtol=1e-12)


# ----------------------------------------------------------------- Legendre


def test_legendre_regular_degenerate():
    for a in (0.0, 2.0, 4.0, 6.0):
        p = ModelParams(a=a)
        assert legendre_regular_profile(1.7, p) == 0
        assert sample_profile(Family.LegendreRegular, p, np.linspace(-2, 2, 11)).degenerate
    for a in (-2.0, -3.0, 3.0, 1.0, -6.0):
        assert legendre_regular_profile(1.7, ModelParams(a=a)) != 0


def test_legendre_regular_closed_form():
    p = ModelParams(epsilon=1, a=3)
    for e in (1.2, 2.0, 3.5):
        assert_allclose(legendre_regular_profile(e, p).real, legendre_regular_closed_form(e, p), rtol=1e-12)
    # the a = 3 profile is proportional to (1 + 4 eta^2) for eta > 1
    r = [legendre_regular_profile(e, p).real / (1 + 4 * e * e) for e in (1.2, 2.0, 3.5)]
    assert_allclose(r, r[0], rtol=1e-12)
    assert_allclose(gamma(-2.5), -8 * math.sqrt(math.pi) / 15, rtol=1e-13)
    # the printed form is not proportional to the profile away from k = -1
    pr = [legendre_regular_printed_form(e, p) / legendre_regular_closed_form(e, p) for e in (1.2, 3.5)]
    assert abs(pr[0] / pr[1] - 1) > 0.1
    with pytest.raises(ParameterError):
        legendre_regular_printed_form(2.0, ModelParams(epsilon=1, a=-2))


def test_legendre_regular_printed_form_vanishes_at_minus_one():
    assert legendre_regular_printed_form(-1.0, ModelParams(a=3)) == 0


def test_legendre_field_examples():
    p = ModelParams(epsilon=1, a=-2)
    assert_allclose(legendre_field(2, 1, p), 3.0, rtol=1e-14)
    for lam in (0.5, 2, 3):
        assert_allclose(legendre_field(3 * lam, 2.5 * lam, p), lam ** 2 * legendre_field(3, 2.5, p), rtol=1e-12)
    assert legendre_field(1.5, 1.5, p) == 0


def test_legendre_irregular_examples():
    v = legendre_irregular_profile(2.0, ModelParams(a=2))
    assert np.isfinite(v)
    assert_allclose(v, legendre_q(0, 3, 2.0) * 3 ** 1.5, rtol=1e-14)
    for e in (1.3, 2.2):
        assert_allclose(legendre_irregular_profile(e, ModelParams(a=3)),
                        legendre_irregular_closed_form(e, ModelParams(a=3)), rtol=1e-11)


def test_legendre_irregular_undefined():
    with pytest.raises(UndefinedError):
        legendre_irregular_profile(2.0, ModelParams(a=-2))


@pytest.mark.parametrize("a", [2.0, 10.0])
def test_branch_identity(a):
    # k/2 + 1 = 3/2 and 7/2
    p = ModelParams(a=a)
    for e in (-0.7, 0.0, 0.4, 0.95):
        lhs, rhs = branch_identity(e, p)
        assert_allclose(lhs, rhs, rtol=1e-14)


def test_travelling_wave_examples():
    p = ModelParams(epsilon=1, a=4, c1=0, c2=1)
    qf, up, um = travelling_wave_factorization(0.5, 1.0, p)
    want = legendre_field(0.5, 1.0, p, "irregular")
    assert_allclose(qf * up * um, want, rtol=1e-12)
    x = 1 - 1e-6
    _, up, um = travelling_wave_factorization(x, 1.0, p)
    assert_allclose([up, um], [(x + 1) ** 2, (x - 1) ** 2], rtol=1e-12)
    q4 = ModelParams(epsilon=4, a=16, c1=0, c2=1)
    # c = 1/2: the factors vanish on x = +-t/2
    _, up, um = travelling_wave_factorization(0.9, 2.0, q4)
    assert_allclose([up, um], [1.9 ** 2, 0.1 ** 2], rtol=1e-12)


def test_light_cone_field_is_finite_nonzero():
    # Q_1^4 (y^2-1)^2 stays bounded at y -> 1
    p = ModelParams(epsilon=1, a=4, c1=0, c2=1)
    vals = [abs(legendre_irregular_profile(1 - d, p)) for d in (1e-3, 1e-5)]
    assert_allclose(vals[0], vals[1], rtol=1e-2)
    assert vals[1] > 0.1


# -------------------------------------------------------------------- 2D


def test_order_formulas():
    assert abs(order_omega(1, 1, 4) - (math.sqrt(12) - 1) / 2) < 1e-14
    assert abs(order_o(1, 13) - 1) < 1e-14
    with pytest.raises(ComplexOrderError):
        order_omega(1, 1, 1)
    with pytest.raises(ComplexOrderError):
        order_o(1, 0)
    assert abs(omega_first_group(GOLDEN_ALPHA)) < 1e-14
    assert abs(GOLDEN_ALPHA - 0.6180339887498949) < 1e-15


def test_twod_l1_residual():
    p = ModelParams(epsilon=1, a=4, alpha=0.5)
    ode = family_ode(Family.TwoD_L1_beta1, p)
    assert residual(lambda e: field_value(Family.TwoD_L1_beta1, p, e, 1.0), ode, np.array([0.3, 2.0])) < 1e-6


def test_twod_beta2_origin():
    p = ModelParams(epsilon=1, a=14)
    v = twod_l1_beta2_profile(0.0, p)
    assert np.iscomplexobj(v) and np.isfinite(v)


def test_radial_examples():
    p = ModelParams(epsilon=1, a=3, alpha=1, c1=1, c2=0)
    with pytest.raises(SingularityError):
        twod_radial_profile(0.0, p)
    q = ModelParams(epsilon=1, a=2.5, alpha=0.0, c1=1, c2=0)
    for e in (0.3, 0.8, 1.5):
        assert twod_radial_profile(e, q) == 1
    assert_allclose(twod_radial_profile(1.0, ModelParams(epsilon=1, a=2.5, alpha=1, c1=1, c2=0)), 1.0, rtol=1e-15)


def test_radial_generic_residual():
    # a = 3, alpha = 1 sits on a c-pole of the first 2F1; use a nearby a
    p = ModelParams(epsilon=1, a=3.2, alpha=1, c1=1, c2=0)
    ode = family_ode(Family.TwoD_Radial, p)
    assert residual(lambda e: twod_radial_profile(float(e), p), ode, np.array([0.5])) < 1e-8


# ------------------------------------------------------------------ source


def test_harmonic_examples():
    p = ModelParams(epsilon=1, a=4, c1=1, c2=0)
    assert harmonic_profile(0.0, p) == 1
    q = ModelParams(epsilon=1, a=1, D=1, c1=0, c2=1)
    for e in (0.2, 0.6):
        assert_allclose(harmonic_profile(-e, q), -harmonic_profile(e, q), rtol=1e-12)
        assert_allclose(harmonic_profile(-e, p), harmonic_profile(e, p), rtol=1e-12)
    r = ModelParams(epsilon=1, a=1, D=1, c1=1, c2=0)
    ode = family_ode(Family.SourceHarmonic, r)
    assert residual(lambda e: harmonic_profile(float(e), r), ode, np.array([0.3])) < 1e-8


def test_coulomb_examples():
    p = ModelParams(epsilon=1, a=1, q=1, c1=1, c2=0)
    assert coulomb_profile(-1.0, p) == 1
    with pytest.raises(SingularityError):
        coulomb_profile(0.0, p)
    ode = family_ode(Family.SourceCoulomb, p)
    assert residual(lambda e: coulomb_profile(float(e), p), ode, np.array([-0.5])) < 1e-6
    p0 = ModelParams(epsilon=1, a=1, q=0, c1=1, c2=0)
    ode0 = family_ode(Family.SourceCoulomb, p0)
    # h = 1e-3 keeps the stencil off its rounding floor for a 1e-8 bound
    assert residual(lambda e: coulomb_profile(float(e), p0), ode0, np.array([-0.5, -1.4]), h=1e-3) < 1e-8


# ---------------------------------------------------------- sampling, mass


def test_sample_profile_masks():
    p = ModelParams(a=4)
    prof = sample_profile(Family.Compact1D, p, np.linspace(-2, 2, 401))
    assert prof.value[200] == 1
    assert np.all(prof.mask[np.abs(prof.eta) > 1.001] == ZERO_EXTENSION)
    assert np.all(prof.mask[np.abs(np.abs(prof.eta) - 1) < 1e-3] == EXCLUDED)
    assert np.all(np.isnan(prof.value[prof.mask == EXCLUDED]))
    with pytest.raises(ParameterError):
        sample_profile(Family.Compact1D, p, [0.0, -1.0])


def test_field_grid_masks_light_cone():
    fld = field_grid(Family.Hyper1D, ModelParams(a=4), np.linspace(-2, 2, 5), [1.0, 2.0])
    assert fld.mask[0, 1] == EXCLUDED and fld.mask[1, 0] == EXCLUDED
    assert fld.mask[0, 2] == VALID


@pytest.mark.parametrize("eps,a,want", [(1, 4, 4 / 3), (1, 6, 16 / 15), (4, 16, 2 / 3), (4, 8, 1.0)])
def test_mass_integral(eps, a, want):
    p = ModelParams(epsilon=eps, a=a)
    prof = sample_profile(Family.Compact1D, p, np.linspace(-2, 2, 9))
    assert_allclose(mass_integral(prof), want, rtol=1e-10)


def test_mass_integral_nonintegrable():
    p = ModelParams(epsilon=1, a=-0.5)
    prof = sample_profile(Family.Compact1D, p, np.linspace(-0.5, 0.5, 5))
    with pytest.raises(NonIntegrableError):
        mass_integral(prof)

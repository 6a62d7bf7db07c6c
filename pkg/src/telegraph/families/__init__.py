"""Self-similar solution families: profiles, fields and their ODEs."""
from .params import (
    DELTA_SING,
    T_MIN,
    Branch,
    Family,
    FamilySpec,
    FORCED_ALPHA,
    ModelParams,
    resolve_alpha,
)
from .odes import ODECoefficients, Laurent, Variant, family_ode, reduce_to_ode
from .onedim import compact_field, compact_profile, hyper_field, hyper_profile
from .legendre import (
    branch_identity,
    legendre_field,
    legendre_irregular_closed_form,
    legendre_irregular_profile,
    legendre_regular_closed_form,
    legendre_regular_degenerate,
    legendre_regular_printed_form,
    legendre_regular_profile,
    travelling_wave_factorization,
)
from .twodim import (
    GOLDEN_ALPHA,
    omega_discriminant,
    omega_first_group,
    o_discriminant,
    order_o,
    order_omega,
    twod_field,
    twod_l1_beta2_profile,
    twod_l1_profile,
    twod_radial_profile,
)
from .source import (
    coulomb_heun_params,
    coulomb_profile,
    harmonic_heun_params,
    harmonic_profile,
    source_field,
)
from .profile import (
    EXCLUDED,
    VALID,
    ZERO_EXTENSION,
    Profile,
    SpacetimeField,
    field_grid,
    field_value,
    mass_integral,
    profile_value,
    project,
    sample_profile,
    singular_points,
    validate,
)

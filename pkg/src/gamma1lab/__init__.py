"""gamma1lab: the hyperfactorial constant L1 and its QED cross-checks.

A binary64 special-functions kit built around three independent routes to
L1 = ln A (Glaisher-Kinkelin), the log-Gamma and log-Gamma1 asymptotics
behind them, zeta/xi machinery for the functional-equation checks, and the
one-loop effective-Lagrangian integrals whose strong-field limits are where
all of these constants meet.  Every numerical result travels as a
``SeriesValue`` (value plus an honest error bound); every identity check
returns an ``IdentityReport``.
"""

from .constants import (
    GlaisherBundle,
    L1Bundle,
    glaisher_bundle,
    l1_bundle,
    l1_reference,
    l1_via_asymptotic,
    l1_via_zeta_2,
    l1_via_zeta_m1,
    zeta_prime_bridge_residual,
)
from .gamma import (
    GammaConstants,
    digamma_at_1,
    euler_constant,
    gamma_constants,
    hyperfactorial,
    log_gamma,
    log_gamma1,
)
from .identities import (
    half_integral_residuals,
    integral_series_residual,
    log_gamma1_from_integral,
    log_gamma1_half_residual,
    raabe_gamma1_residual,
    raabe_residual,
)
from .kernel import (
    DEFAULT_CONTEXT,
    BudgetError,
    CapacityError,
    DomainError,
    IdentityReport,
    PoleError,
    PrecisionContext,
    SeriesValue,
    UnsupportedArgumentError,
    bernoulli,
    bernoulli_float,
    compensated_sum,
    identity_tolerance,
)
from .qed import (
    ALPHA,
    FieldConfig,
    LagrangianPoint,
    beta_log_slope,
    beta_slope_normalized,
    gamma_integral_limit_residual,
    lagrangian_closed_form_spinor,
    lagrangian_grid,
    lagrangian_proper_time_scalar,
    lagrangian_proper_time_spinor,
    lagrangian_strong_scalar,
    lagrangian_strong_spinor,
    scaled_gamma_integral,
)
from .quadrature import gk15, integrate
from .zeta import (
    ZetaConstants,
    functional_equation_residual,
    jacobi_psi,
    theta_symmetry_residual,
    xi_integral,
    xi_product,
    zeta,
    zeta_constants,
    zeta_direct,
    zeta_eta,
    zeta_prime,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # kernel
    "PrecisionContext",
    "DEFAULT_CONTEXT",
    "SeriesValue",
    "IdentityReport",
    "identity_tolerance",
    "compensated_sum",
    "bernoulli",
    "bernoulli_float",
    "DomainError",
    "PoleError",
    "UnsupportedArgumentError",
    "BudgetError",
    "CapacityError",
    # gamma
    "GammaConstants",
    "gamma_constants",
    "euler_constant",
    "digamma_at_1",
    "log_gamma",
    "log_gamma1",
    "hyperfactorial",
    # quadrature
    "gk15",
    "integrate",
    # zeta
    "zeta",
    "zeta_eta",
    "zeta_direct",
    "zeta_prime",
    "ZetaConstants",
    "zeta_constants",
    "jacobi_psi",
    "theta_symmetry_residual",
    "xi_product",
    "xi_integral",
    "functional_equation_residual",
    # constants
    "L1Bundle",
    "GlaisherBundle",
    "l1_via_zeta_m1",
    "l1_via_zeta_2",
    "l1_via_asymptotic",
    "l1_bundle",
    "l1_reference",
    "glaisher_bundle",
    "zeta_prime_bridge_residual",
    # identities
    "raabe_residual",
    "raabe_gamma1_residual",
    "log_gamma1_from_integral",
    "integral_series_residual",
    "half_integral_residuals",
    "log_gamma1_half_residual",
    # qed
    "ALPHA",
    "FieldConfig",
    "LagrangianPoint",
    "lagrangian_proper_time_spinor",
    "lagrangian_proper_time_scalar",
    "lagrangian_closed_form_spinor",
    "lagrangian_strong_spinor",
    "lagrangian_strong_scalar",
    "lagrangian_grid",
    "scaled_gamma_integral",
    "gamma_integral_limit_residual",
    "beta_log_slope",
    "beta_slope_normalized",
]

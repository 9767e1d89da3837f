"""Integral identities connecting log Gamma, log Gamma1, and L1.

The classical Raabe integral

    int_x^{x+1} ln Gamma(t) dt = x ln x - x + ln sqrt(2 pi),   x >= 0,

has an exact analogue one level up.  Writing G(x) = int_x^{x+1} ln Gamma1,
the recurrence ln Gamma1(x+1) - ln Gamma1(x) = x ln x gives G'(x) = x ln x,
hence

    int_x^{x+1} ln Gamma1(t) dt = (L1 - 1/12) + (x^2/2) ln x - x^2/4,

the constant being the x -> 0 limit.  Both residuals are checked here with
the left side done by adaptive quadrature over the series implementations.

The half-argument cluster pins down the same constant L1 from below 1:

    int_0^{1/2} ln Gamma(t) dt          = (3/2) L1 + (5/24) ln 2 + (1/4) ln pi,
    int_0^{1/2} ln Gamma(t+1) dt        = (3/2) L1 - (7/24) ln 2 + (1/4) ln pi - 1/2,
    ln Gamma1(1/2)                      = (3/2) L1 - 1/8 - (1/24) ln 2,
    ln Gamma1(3/2)                      = (3/2) L1 - 1/8 - (13/24) ln 2.

Finally ``log_gamma1_from_integral`` rebuilds ln Gamma1 from

    ln Gamma1(x) = int_0^x ln Gamma(t) dt + x(x-1)/2 - x ln sqrt(2 pi),

an independent route to compare against the asymptotic series.
"""

from __future__ import annotations

import math

from .constants import l1_reference
from .gamma import LOG_SQRT_TWO_PI, log_gamma, log_gamma1
from .kernel import (
    DEFAULT_CONTEXT,
    EPS,
    DomainError,
    IdentityReport,
    PrecisionContext,
    SeriesValue,
    compensated_sum,
    identity_tolerance,
)
from .quadrature import integrate

__all__ = [
    "raabe_residual",
    "raabe_gamma1_residual",
    "log_gamma1_from_integral",
    "integral_series_residual",
    "half_integral_residuals",
    "log_gamma1_half_residual",
]


def _resolve_l1(l1, ctx: PrecisionContext) -> SeriesValue:
    if l1 is None:
        return l1_reference(ctx)
    if isinstance(l1, SeriesValue):
        return l1
    return SeriesValue(float(l1), 4.0 * EPS, 1, True)


def _pointwise_bound(f, a: float, b: float, ctx: PrecisionContext) -> float:
    # Quadrature error estimates see the integrand as exact; fold in the
    # series truncation error of the integrand itself, probed mid-interval.
    probes = (a + 0.25 * (b - a), a + 0.5 * (b - a), a + 0.75 * (b - a))
    worst = max(f(t, ctx).error_bound for t in probes)
    return worst * (b - a)


def raabe_residual(x: float, ctx: PrecisionContext | None = None) -> IdentityReport:
    """Residual of int_x^{x+1} ln Gamma = x ln x - x + ln sqrt(2 pi), x >= 0."""
    ctx = ctx or DEFAULT_CONTEXT
    x = float(x)
    if x < 0.0:
        raise DomainError("the Raabe integral is checked for x >= 0")
    quad = integrate(lambda t: log_gamma(t, ctx).value, x, x + 1.0, ctx)
    if x == 0.0:
        rhs = LOG_SQRT_TWO_PI  # x ln x - x -> 0
    else:
        rhs = compensated_sum([x * math.log(x), -x, LOG_SQRT_TWO_PI])
    bound = quad.error_bound + _pointwise_bound(log_gamma, x, x + 1.0, ctx)
    tol = identity_tolerance([bound, 4.0 * EPS * (abs(rhs) + 1.0)])
    return IdentityReport.from_sides(f"raabe_log_gamma_x={x:g}", quad.value, rhs, tol)


def raabe_gamma1_residual(
    x: float, ctx: PrecisionContext | None = None, l1=None
) -> IdentityReport:
    """Residual of int_x^{x+1} ln Gamma1 = (L1 - 1/12) + (x^2/2) ln x - x^2/4."""
    ctx = ctx or DEFAULT_CONTEXT
    x = float(x)
    if x < 0.0:
        raise DomainError("the Gamma1 Raabe integral is checked for x >= 0")
    level = _resolve_l1(l1, ctx)
    quad = integrate(lambda t: log_gamma1(t, ctx).value, x, x + 1.0, ctx)
    pieces = [level.value, -1.0 / 12.0]
    if x > 0.0:  # (x^2/2) ln x - x^2/4 -> 0 with x
        pieces.append(0.5 * x * x * math.log(x))
        pieces.append(-0.25 * x * x)
    rhs = compensated_sum(pieces)
    bound = quad.error_bound + _pointwise_bound(log_gamma1, x, x + 1.0, ctx)
    rhs_bound = level.error_bound + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    tol = identity_tolerance([bound, rhs_bound])
    return IdentityReport.from_sides(f"raabe_log_gamma1_x={x:g}", quad.value, rhs, tol)


def log_gamma1_from_integral(x: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """ln Gamma1(x) = int_0^x ln Gamma + x(x-1)/2 - x ln sqrt(2 pi), x >= 0."""
    ctx = ctx or DEFAULT_CONTEXT
    x = float(x)
    if x < 0.0:
        raise DomainError("log_gamma1_from_integral needs x >= 0")
    if x == 0.0:
        return SeriesValue(0.0, 0.0, 0, True)
    quad = integrate(lambda t: log_gamma(t, ctx).value, 0.0, x, ctx)
    pieces = [quad.value, 0.5 * x * (x - 1.0), -x * LOG_SQRT_TWO_PI]
    value = compensated_sum(pieces)
    bound = (
        quad.error_bound
        + _pointwise_bound(log_gamma, 0.0, x, ctx)
        + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    )
    return SeriesValue(value, bound, quad.terms_used, bound <= ctx.abs_tol)


def integral_series_residual(x: float, ctx: PrecisionContext | None = None) -> IdentityReport:
    """Integral route vs asymptotic-series route to ln Gamma1(x)."""
    ctx = ctx or DEFAULT_CONTEXT
    x = float(x)
    via_integral = log_gamma1_from_integral(x, ctx)
    via_series = log_gamma1(x, ctx)
    tol = identity_tolerance([via_integral.error_bound, via_series.error_bound])
    return IdentityReport.from_sides(
        f"log_gamma1_integral_vs_series_x={x:g}",
        via_integral.value,
        via_series.value,
        tol,
    )


def _closed_form(pieces: list[float], level: SeriesValue) -> tuple[float, float]:
    value = compensated_sum(pieces)
    bound = 1.5 * level.error_bound + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return value, bound


def half_integral_residuals(
    ctx: PrecisionContext | None = None, l1=None
) -> list[IdentityReport]:
    """The three half-argument identities listed in the module docstring
    that involve an integral or ln Gamma1(3/2)."""
    ctx = ctx or DEFAULT_CONTEXT
    level = _resolve_l1(l1, ctx)
    ln2 = math.log(2.0)
    lnpi = math.log(math.pi)
    reports = []

    quad = integrate(lambda t: log_gamma(t, ctx).value, 0.0, 0.5, ctx)
    rhs, rhs_bound = _closed_form([1.5 * level.value, 5.0 / 24.0 * ln2, 0.25 * lnpi], level)
    lhs_bound = quad.error_bound + _pointwise_bound(log_gamma, 0.0, 0.5, ctx)
    reports.append(
        IdentityReport.from_sides(
            "half_integral_log_gamma",
            quad.value,
            rhs,
            identity_tolerance([lhs_bound, rhs_bound]),
        )
    )

    g32 = log_gamma1(1.5, ctx)
    rhs, rhs_bound = _closed_form([1.5 * level.value, -0.125, -13.0 / 24.0 * ln2], level)
    reports.append(
        IdentityReport.from_sides(
            "log_gamma1_three_halves",
            g32.value,
            rhs,
            identity_tolerance([g32.error_bound, rhs_bound]),
        )
    )

    quad = integrate(lambda t: log_gamma(t + 1.0, ctx).value, 0.0, 0.5, ctx)
    rhs, rhs_bound = _closed_form(
        [1.5 * level.value, -7.0 / 24.0 * ln2, 0.25 * lnpi, -0.5], level
    )
    lhs_bound = quad.error_bound + _pointwise_bound(
        lambda t, c: log_gamma(t + 1.0, c), 0.0, 0.5, ctx
    )
    reports.append(
        IdentityReport.from_sides(
            "half_integral_log_gamma_shifted",
            quad.value,
            rhs,
            identity_tolerance([lhs_bound, rhs_bound]),
        )
    )
    return reports


def log_gamma1_half_residual(
    ctx: PrecisionContext | None = None, l1=None
) -> IdentityReport:
    """Residual of ln Gamma1(1/2) = (3/2) L1 - 1/8 - (1/24) ln 2."""
    ctx = ctx or DEFAULT_CONTEXT
    level = _resolve_l1(l1, ctx)
    g12 = log_gamma1(0.5, ctx)
    rhs, rhs_bound = _closed_form(
        [1.5 * level.value, -0.125, -math.log(2.0) / 24.0], level
    )
    return IdentityReport.from_sides(
        "log_gamma1_half",
        g12.value,
        rhs,
        identity_tolerance([g12.error_bound, rhs_bound]),
    )

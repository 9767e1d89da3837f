"""The constant L1 = ln A (A the Glaisher-Kinkelin constant) by three routes.

L1 is the additive constant of the hyperfactorial asymptotics, the same way
ln sqrt(2 pi) is the constant of the Stirling series.  The routes kept here:

* ``l1_via_zeta_m1``    L1 = 1/12 - zeta'(-1),
* ``l1_via_zeta_2``     L1 = ln(2 pi)/12 + C/12 - zeta'(2)/(2 pi^2),
* ``l1_via_asymptotic`` the defining limit, from raw partial sums:

      L1 = sum_{k=2}^{n} k ln k - (n(n+1)/2 + 1/12) ln n + n^2/4
           + sum_{j>=2} B_{2j} / ((2j-2)(2j-1)(2j) n^{2j-2}),

  truncated at the smallest term.  This route touches neither zeta nor
  log_gamma1, so it breaks every circular dependence and anchors the
  cross-checks.

A itself is exposed through four exponentiated routes, two of them driven
by integrals of ln Gamma over [0, 1/2]:

    A = 2^{-5/36} pi^{-1/6} exp[(2/3) int_0^{1/2} ln Gamma(x) dx],
    A = 2^{7/36}  pi^{-1/6} exp[1/3 + (2/3) int_0^{1/2} ln Gamma(x+1) dx].

``zeta_prime_bridge_residual`` checks the identity gluing the first two
routes together,

    -1 + 12 zeta'(-1) = -ln(2 pi e^C) + (6/pi^2) zeta'(2),

with the left side built from the asymptotic route and the right side from
Euler-Maclaurin machinery, so the two sides share no numerics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .gamma import euler_constant, log_gamma
from .kernel import (
    DEFAULT_CONTEXT,
    EPS,
    DomainError,
    IdentityReport,
    PrecisionContext,
    SeriesValue,
    bernoulli_float,
    compensated_sum,
    identity_tolerance,
)
from .quadrature import integrate
from .zeta import zeta_prime

__all__ = [
    "L1Bundle",
    "GlaisherBundle",
    "l1_via_zeta_m1",
    "l1_via_zeta_2",
    "l1_via_asymptotic",
    "l1_bundle",
    "l1_reference",
    "glaisher_bundle",
    "zeta_prime_bridge_residual",
]


@dataclass(frozen=True)
class L1Bundle:
    via_zeta_m1: SeriesValue
    via_zeta_2: SeriesValue
    via_asymptotic: SeriesValue
    spread: float
    value: SeriesValue


@dataclass(frozen=True)
class GlaisherBundle:
    via_zeta_m1: SeriesValue
    via_zeta_2: SeriesValue
    via_half_integral: SeriesValue
    via_shifted_integral: SeriesValue
    spread: float
    value: SeriesValue


def l1_via_zeta_m1(ctx: PrecisionContext | None = None) -> SeriesValue:
    """L1 = 1/12 - zeta'(-1)."""
    ctx = ctx or DEFAULT_CONTEXT
    zp = zeta_prime(-1.0, ctx)
    value = 1.0 / 12.0 - zp.value
    bound = zp.error_bound + 2.0 * EPS
    return SeriesValue(value, bound, zp.terms_used, bound <= ctx.abs_tol)


def l1_via_zeta_2(ctx: PrecisionContext | None = None) -> SeriesValue:
    """L1 = ln(2 pi)/12 + C/12 - zeta'(2)/(2 pi^2)."""
    ctx = ctx or DEFAULT_CONTEXT
    c = euler_constant(ctx)
    zp2 = zeta_prime(2.0, ctx)
    weight = 1.0 / (2.0 * math.pi * math.pi)
    pieces = [math.log(2.0 * math.pi) / 12.0, c.value / 12.0, -weight * zp2.value]
    value = compensated_sum(pieces)
    bound = (
        c.error_bound / 12.0
        + weight * zp2.error_bound
        + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    )
    return SeriesValue(value, bound, zp2.terms_used, bound <= ctx.abs_tol)


def l1_via_asymptotic(ctx: PrecisionContext | None = None, cutoff: int = 10) -> SeriesValue:
    """L1 from the defining limit at n = cutoff, tail stopped at its
    smallest term.  Independent of every zeta and Gamma routine."""
    ctx = ctx or DEFAULT_CONTEXT
    n = int(cutoff)
    if n < 4:
        raise DomainError("the asymptotic route needs cutoff >= 4")
    fn = float(n)
    ln_n = math.log(fn)

    pieces = [k * math.log(k) for k in range(2, n + 1)]
    pieces.append(-(0.5 * fn * (fn + 1.0) + 1.0 / 12.0) * ln_n)
    pieces.append(0.25 * fn * fn)

    power = 1.0 / (fn * fn)  # n^{-(2j-2)} at j = 2
    prev = math.inf
    omitted = 0.0
    terms = 0
    for j in range(2, ctx.max_em_terms + 2):
        two_j = 2 * j
        term = bernoulli_float(two_j) / ((two_j - 2.0) * (two_j - 1.0) * two_j) * power
        if abs(term) >= prev or abs(term) < 1e-19:
            omitted = abs(term)
            break
        pieces.append(term)
        prev = abs(term)
        terms += 1
        power /= fn * fn
    else:
        omitted = prev

    value = compensated_sum(pieces)
    bound = omitted + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return SeriesValue(value, bound, n + terms, bound <= ctx.abs_tol)


def l1_bundle(ctx: PrecisionContext | None = None) -> L1Bundle:
    ctx = ctx or DEFAULT_CONTEXT
    a = l1_via_zeta_m1(ctx)
    b = l1_via_zeta_2(ctx)
    c = l1_via_asymptotic(ctx)
    values = (a.value, b.value, c.value)
    return L1Bundle(a, b, c, max(values) - min(values), a)


@lru_cache(maxsize=8)
def _l1_reference_cached(ctx: PrecisionContext) -> SeriesValue:
    return l1_via_zeta_m1(ctx)


def l1_reference(ctx: PrecisionContext | None = None) -> SeriesValue:
    """The library-wide L1 value (the zeta'(-1) route), cached per context."""
    return _l1_reference_cached(ctx or DEFAULT_CONTEXT)


def _half_integral(shift: float, ctx: PrecisionContext) -> tuple[SeriesValue, float]:
    quad = integrate(lambda t: log_gamma(t + shift, ctx).value, 0.0, 0.5, ctx)
    pointwise = 0.5 * max(
        log_gamma(t + shift, ctx).error_bound for t in (0.125, 0.25, 0.375)
    )
    return quad, pointwise


def _exp_route(pieces: list[float], log_bound: float, terms: int, ctx: PrecisionContext) -> SeriesValue:
    log_a = compensated_sum(pieces)
    bound_log = log_bound + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    value = math.exp(log_a)
    bound = value * (bound_log + 2.0 * EPS)
    return SeriesValue(value, bound, terms, bound <= ctx.abs_tol)


def glaisher_bundle(ctx: PrecisionContext | None = None) -> GlaisherBundle:
    """The Glaisher-Kinkelin constant A = e^{L1} by four routes."""
    ctx = ctx or DEFAULT_CONTEXT
    ln2 = math.log(2.0)
    lnpi = math.log(math.pi)

    a = l1_via_zeta_m1(ctx)
    via_m1 = _exp_route([a.value], a.error_bound, a.terms_used, ctx)

    b = l1_via_zeta_2(ctx)
    via_2 = _exp_route([b.value], b.error_bound, b.terms_used, ctx)

    quad, pw = _half_integral(0.0, ctx)
    via_half = _exp_route(
        [-5.0 / 36.0 * ln2, -lnpi / 6.0, (2.0 / 3.0) * quad.value],
        (2.0 / 3.0) * (quad.error_bound + pw),
        quad.terms_used,
        ctx,
    )

    quad, pw = _half_integral(1.0, ctx)
    via_shift = _exp_route(
        [7.0 / 36.0 * ln2, -lnpi / 6.0, 1.0 / 3.0, (2.0 / 3.0) * quad.value],
        (2.0 / 3.0) * (quad.error_bound + pw),
        quad.terms_used,
        ctx,
    )

    values = (via_m1.value, via_2.value, via_half.value, via_shift.value)
    return GlaisherBundle(via_m1, via_2, via_half, via_shift, max(values) - min(values), via_m1)


def zeta_prime_bridge_residual(ctx: PrecisionContext | None = None) -> IdentityReport:
    """Residual of -1 + 12 zeta'(-1) = -ln(2 pi e^C) + (6/pi^2) zeta'(2),
    left side through the asymptotic L1 route, right side through
    Euler-Maclaurin, so no primitive is shared between the sides."""
    ctx = ctx or DEFAULT_CONTEXT
    asym = l1_via_asymptotic(ctx)
    lhs = -12.0 * asym.value  # -1 + 12 (1/12 - L1) collapses to -12 L1
    lhs_bound = 12.0 * asym.error_bound

    c = euler_constant(ctx)
    zp2 = zeta_prime(2.0, ctx)
    weight = 6.0 / (math.pi * math.pi)
    pieces = [-math.log(2.0 * math.pi), -c.value, weight * zp2.value]
    rhs = compensated_sum(pieces)
    rhs_bound = (
        c.error_bound
        + weight * zp2.error_bound
        + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    )
    tol = identity_tolerance([lhs_bound, rhs_bound])
    return IdentityReport.from_sides("zeta_prime_bridge", lhs, rhs, tol)

"""Riemann zeta machinery in binary64.

Routes:

* ``zeta_eta``: the alternating (Dirichlet eta) series
  eta(s) = sum (-1)^{k} (k+1)^{-s}, accelerated with Chebyshev-polynomial
  weights; the error decays like (3+sqrt(8))^{-n} for totally monotone
  term streams, which (k+1)^{-s} is for every s > 0.  zeta = eta/(1-2^{1-s}).
* ``zeta_direct``: Euler-Maclaurin with the analytic B_{2k} tail, s > 1.
  This branch also covers 1 < s < 1.3 where the eta prefactor 1-2^{1-s}
  is small.
* reflection: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  for s <= 0, with the trivial zeros and zeta(0) = -1/2 handled exactly.

Derivatives: zeta'(s) for s > 1 differentiates the Euler-Maclaurin formula
term by term; zeta'(-1) and zeta'(-2) come from the closed forms

    zeta'(-1) = (1/12) [1 - ln(2 pi) - C + (6/pi^2) zeta'(2)],
    zeta'(-2) = -zeta(3) / (4 pi^2),

so those two printed constants are driven by zeta'(2) and zeta(3).

The completed function xi(s) = (1/2) s(s-1) pi^{-s/2} Gamma(s/2) zeta(s)
is available both as that product and through the theta-sum integral

    xi(s) = (1/2) s(s-1) int_1^inf Psi(x) (x^{s/2-1} + x^{-s/2-1/2}) dx + 1/2,

with Psi(x) = sum_{n>=1} exp(-n^2 pi x), giving a genuinely independent
route to the same values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gamma import euler_constant, log_gamma
from .kernel import (
    DEFAULT_CONTEXT,
    EPS,
    BudgetError,
    DomainError,
    IdentityReport,
    PoleError,
    PrecisionContext,
    SeriesValue,
    UnsupportedArgumentError,
    bernoulli,
    compensated_sum,
    identity_tolerance,
)
from .quadrature import integrate

__all__ = [
    "ZetaConstants",
    "zeta",
    "zeta_eta",
    "zeta_direct",
    "zeta_prime",
    "zeta_constants",
    "jacobi_psi",
    "theta_symmetry_residual",
    "xi_product",
    "xi_integral",
    "functional_equation_residual",
]

_CVZ_BASE = 3.0 + 2.0 * math.sqrt(2.0)  # 3 + sqrt(8)


def zeta_eta(s: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """zeta(s) for s > 0, s != 1, through the accelerated eta series."""
    ctx = ctx or DEFAULT_CONTEXT
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta has its simple pole at s = 1")
    if s <= 0.0:
        raise DomainError("the eta route needs s > 0")
    den = 1.0 - 2.0 ** (1.0 - s)

    eta_tol = max(0.1 * min(ctx.abs_tol, 1e-15) * abs(den), 1e-19)
    n = int(math.ceil(math.log(6.0 / eta_tol) / math.log(_CVZ_BASE))) + 3
    n = max(12, min(n, ctx.max_series_terms))

    d = _CVZ_BASE**n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    total = 0.0
    abs_acc = 0.0
    for k in range(n):
        c = b - c
        term = c * (k + 1.0) ** (-s)
        total += term
        abs_acc += abs(term)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    eta = total / d
    eta_bound = 6.0 / d + 2.0 * EPS * abs_acc / d

    value = eta / den
    bound = (eta_bound + 2.0 * EPS * abs(eta)) / abs(den)
    return SeriesValue(value, bound, n, bound <= ctx.abs_tol)


def zeta_direct(s: float, ctx: PrecisionContext | None = None, cutoff: int = 50) -> SeriesValue:
    """zeta(s) for s > 1 by Euler-Maclaurin with the analytic tail

    sum_{m<N} m^{-s} + N^{1-s}/(s-1) + N^{-s}/2
        + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{1-s-2k},

    the tail stopping at its smallest term.
    """
    ctx = ctx or DEFAULT_CONTEXT
    s = float(s)
    if s <= 1.0:
        raise DomainError("the direct Euler-Maclaurin branch needs s > 1")
    if cutoff < 10:
        raise DomainError("cutoff must be at least 10")
    big_n = float(cutoff)

    pieces = [float(m) ** (-s) for m in range(1, cutoff)]
    pieces.append(big_n ** (1.0 - s) / (s - 1.0))
    pieces.append(0.5 * big_n ** (-s))

    poch = s  # (s)_{2k-1}
    power = big_n ** (-1.0 - s)  # N^{1-s-2k}
    inv_n2 = 1.0 / (big_n * big_n)
    prev = math.inf
    omitted = 0.0
    terms = 0
    for k in range(1, ctx.max_em_terms + 1):
        coef = float(bernoulli(2 * k) / math.factorial(2 * k))
        term = coef * poch * power
        if abs(term) >= prev or abs(term) < 1e-19:
            omitted = abs(term)
            break
        pieces.append(term)
        prev = abs(term)
        terms += 1
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k)
        power *= inv_n2
    else:
        omitted = prev

    value = compensated_sum(pieces)
    bound = omitted + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return SeriesValue(value, bound, cutoff + terms, bound <= ctx.abs_tol)


def zeta(s: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """zeta(s) for s != 1: eta route for s > 0 (direct branch where the
    eta prefactor degrades), reflection for s <= 0."""
    ctx = ctx or DEFAULT_CONTEXT
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta has its simple pole at s = 1")
    if s == 0.0:
        return SeriesValue(-0.5, 4.0 * EPS, 1, True)
    if s > 0.0:
        if 1.0 < s < 1.3:
            return zeta_direct(s, ctx)
        return zeta_eta(s, ctx)

    # reflection: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    if s == math.floor(s) and int(s) % 2 == 0:
        return SeriesValue(0.0, 0.0, 0, True)  # trivial zeros, exactly
    if s < -170.0:
        raise UnsupportedArgumentError("reflection overflows binary64 below s = -170")
    mirrored = zeta(1.0 - s, ctx)
    lg = log_gamma(1.0 - s, ctx)
    phase = math.sin(0.5 * math.pi * s)
    pref = phase * math.exp(s * math.log(2.0) + (s - 1.0) * math.log(math.pi) + lg.value)
    value = pref * mirrored.value
    bound = abs(pref) * mirrored.error_bound + abs(value) * (lg.error_bound + 8.0 * EPS)
    return SeriesValue(value, bound, mirrored.terms_used + lg.terms_used, bound <= ctx.abs_tol)


def _zeta_prime_em(s: float, ctx: PrecisionContext, cutoff: int = 50) -> SeriesValue:
    # d/ds of the Euler-Maclaurin formula, term by term:
    #   zeta'(s) = -sum_{m<N} ln m · m^{-s}
    #              - ln N · N^{1-s}/(s-1) - N^{1-s}/(s-1)^2 - ln N · N^{-s}/2
    #              + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{1-s-2k} (h_k - ln N),
    # with h_k = sum_{j=0}^{2k-2} 1/(s+j) the log-derivative of (s)_{2k-1}.
    big_n = float(cutoff)
    ln_n = math.log(big_n)
    pieces = [-math.log(m) * float(m) ** (-s) for m in range(2, cutoff)]
    pieces.append(-ln_n * big_n ** (1.0 - s) / (s - 1.0))
    pieces.append(-big_n ** (1.0 - s) / (s - 1.0) ** 2)
    pieces.append(-0.5 * ln_n * big_n ** (-s))

    poch = s
    hsum = 1.0 / s
    power = big_n ** (-1.0 - s)
    inv_n2 = 1.0 / (big_n * big_n)
    prev = math.inf
    omitted = 0.0
    terms = 0
    for k in range(1, ctx.max_em_terms + 1):
        coef = float(bernoulli(2 * k) / math.factorial(2 * k))
        term = coef * poch * power * (hsum - ln_n)
        if abs(term) >= prev or abs(term) < 1e-19:
            omitted = abs(term)
            break
        pieces.append(term)
        prev = abs(term)
        terms += 1
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k)
        hsum += 1.0 / (s + 2.0 * k - 1.0) + 1.0 / (s + 2.0 * k)
        power *= inv_n2
    else:
        omitted = prev

    value = compensated_sum(pieces)
    bound = omitted + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return SeriesValue(value, bound, cutoff + terms, bound <= ctx.abs_tol)


def zeta_prime(s: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """zeta'(s): Euler-Maclaurin for s > 1, closed forms at s = -1, -2."""
    ctx = ctx or DEFAULT_CONTEXT
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta'(s) inherits the pole at s = 1")
    if s > 1.0:
        return _zeta_prime_em(s, ctx)
    if s == -1.0:
        zp2 = _zeta_prime_em(2.0, ctx)
        c = euler_constant(ctx)
        weight = 6.0 / (math.pi * math.pi)
        value = (1.0 - math.log(2.0 * math.pi) - c.value + weight * zp2.value) / 12.0
        bound = (c.error_bound + weight * zp2.error_bound) / 12.0 + 4.0 * EPS
        return SeriesValue(value, bound, zp2.terms_used, bound <= ctx.abs_tol)
    if s == -2.0:
        # deliberately the direct branch: the functional-equation check at
        # s = 3 compares this against the eta route, so the two sides must
        # not share a zeta(3) evaluation
        z3 = zeta_direct(3.0, ctx)
        scale = 1.0 / (4.0 * math.pi * math.pi)
        value = -z3.value * scale
        bound = z3.error_bound * scale + 2.0 * EPS * abs(value)
        return SeriesValue(value, bound, z3.terms_used, bound <= ctx.abs_tol)
    raise UnsupportedArgumentError(
        "zeta_prime supports s > 1 and the closed-form points s = -1, -2"
    )


@dataclass(frozen=True)
class ZetaConstants:
    """The derivative/odd-argument values the identity suites lean on."""

    zeta_3: SeriesValue
    zeta_prime_2: SeriesValue
    zeta_prime_m1: SeriesValue
    zeta_prime_m2: SeriesValue


def zeta_constants(ctx: PrecisionContext | None = None) -> ZetaConstants:
    ctx = ctx or DEFAULT_CONTEXT
    return ZetaConstants(
        zeta_3=zeta(3.0, ctx),
        zeta_prime_2=zeta_prime(2.0, ctx),
        zeta_prime_m1=zeta_prime(-1.0, ctx),
        zeta_prime_m2=zeta_prime(-2.0, ctx),
    )


def jacobi_psi(x: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """Psi(x) = sum_{n>=1} exp(-n^2 pi x) for x > 0.

    The tail after n terms is below exp(-pi x (n+1)^2) / (1 - exp(-pi x (2n+3)))
    since successive exponents step by at least pi x (2n+3).
    """
    ctx = ctx or DEFAULT_CONTEXT
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError("jacobi_psi needs x > 0")
    tol = 0.05 * min(ctx.abs_tol, 1e-15)
    terms: list[float] = []
    n = 1
    while True:
        terms.append(math.exp(-math.pi * x * n * n))
        nxt = math.exp(-math.pi * x * (n + 1.0) * (n + 1.0))
        ratio = math.exp(-math.pi * x * (2.0 * n + 3.0))
        tail = nxt / (1.0 - ratio) if ratio < 1.0 else math.inf
        if tail < tol:
            break
        if n >= ctx.max_series_terms:
            raise BudgetError(f"jacobi_psi needs more than {ctx.max_series_terms} terms at x={x}")
        n += 1
    value = math.fsum(terms)
    bound = tail + 2.0 * EPS * (value + 1.0)
    return SeriesValue(value, bound, n, bound <= ctx.abs_tol)


def theta_symmetry_residual(x: float, ctx: PrecisionContext | None = None) -> IdentityReport:
    """Check 2 Psi(x) + 1 = x^{-1/2} (2 Psi(1/x) + 1)."""
    ctx = ctx or DEFAULT_CONTEXT
    x = float(x)
    if x <= 0.0:
        raise DomainError("theta symmetry needs x > 0")
    direct = jacobi_psi(x, ctx)
    mirrored = jacobi_psi(1.0 / x, ctx)
    inv_sqrt = 1.0 / math.sqrt(x)
    lhs = 2.0 * direct.value + 1.0
    rhs = inv_sqrt * (2.0 * mirrored.value + 1.0)
    tol = identity_tolerance(
        [2.0 * direct.error_bound, 2.0 * inv_sqrt * mirrored.error_bound]
    )
    return IdentityReport.from_sides(f"theta_symmetry_x={x:g}", lhs, rhs, tol)


def _check_xi_domain(s: float, upper: float, what: str) -> float:
    s = float(s)
    if not (0.0 < s <= upper) or s == 1.0:
        raise DomainError(f"{what} is served on (0,1) union (1,{upper:g}], got {s!r}")
    return s


def xi_product(s: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """xi(s) = (1/2) s(s-1) pi^{-s/2} Gamma(s/2) zeta(s)."""
    ctx = ctx or DEFAULT_CONTEXT
    s = _check_xi_domain(s, 12.0, "xi_product")
    z = zeta(s, ctx)
    lg = log_gamma(0.5 * s, ctx)
    pref = 0.5 * s * (s - 1.0) * math.exp(lg.value - 0.5 * s * math.log(math.pi))
    value = pref * z.value
    bound = abs(pref) * z.error_bound + abs(value) * (lg.error_bound + 6.0 * EPS)
    return SeriesValue(value, bound, z.terms_used + lg.terms_used, bound <= ctx.abs_tol)


def xi_integral(s: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """xi(s) from the theta-sum representation (independent of zeta/Gamma).

    xi(s) = (1/2) s(s-1) int_1^X Psi(x)(x^{s/2-1} + x^{-s/2-1/2}) dx + 1/2,
    with X pushed out until the exponentially small tail is below tolerance.
    """
    ctx = ctx or DEFAULT_CONTEXT
    s = _check_xi_domain(s, 4.0, "xi_integral")

    tail_tol = 0.05 * min(ctx.abs_tol, 1e-13)
    grow = max(0.5 * s - 1.0, -0.5 * s - 0.5, 0.0)
    upper = 8.0
    while 3.0 * math.exp(-math.pi * upper) * upper**grow > tail_tol:
        upper += 2.0

    def integrand(t: float) -> float:
        psi = jacobi_psi(t, ctx)
        return psi.value * (t ** (0.5 * s - 1.0) + t ** (-0.5 * s - 0.5))

    quad = integrate(integrand, 1.0, upper, ctx)
    kappa = 0.5 * s * (s - 1.0)
    value = kappa * quad.value + 0.5
    bound = abs(kappa) * (quad.error_bound + tail_tol) + 6.0 * EPS * (abs(value) + 1.0)
    return SeriesValue(value, bound, quad.terms_used, bound <= ctx.abs_tol)


def functional_equation_residual(s: float, ctx: PrecisionContext | None = None) -> IdentityReport:
    """Residual of zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).

    For s < 1 the right side is evaluated exactly as written.  For s > 1,
    Gamma(1-s) is rewritten through the Gamma reflection formula; at odd
    integers that rewriting is 0/0 and the analytic limit is used instead,
    which lands on zeta'(1-s) (implemented for s = 3, where zeta'(-2) has
    its closed form).
    """
    ctx = ctx or DEFAULT_CONTEXT
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta has its simple pole at s = 1")
    if s == 0.0:
        raise DomainError("s = 0 pairs with the pole at 1 - s = 1")

    lhs = zeta(s, ctx)
    ln2 = math.log(2.0)
    lnpi = math.log(math.pi)

    if s < 1.0:
        mirrored = zeta(1.0 - s, ctx)
        lg = log_gamma(1.0 - s, ctx)
        pref = math.sin(0.5 * math.pi * s) * math.exp(s * ln2 + (s - 1.0) * lnpi + lg.value)
        rhs = pref * mirrored.value
        rhs_bound = abs(pref) * mirrored.error_bound + abs(rhs) * (lg.error_bound + 8.0 * EPS)
    else:
        nearest = round(s)
        if abs(s - nearest) < 1e-9 and int(nearest) % 2 == 1:
            m = (int(nearest) - 1) // 2
            if m != 1:
                raise UnsupportedArgumentError(
                    "odd-argument limit needs zeta'(1-s); only s = 3 is supported"
                )
            zp = zeta_prime(-2.0, ctx)
            lgs = log_gamma(s, ctx)
            pref = (-1.0) ** m * math.exp(s * ln2 + (s - 1.0) * lnpi - lgs.value)
            rhs = pref * zp.value
            rhs_bound = abs(pref) * zp.error_bound + abs(rhs) * (lgs.error_bound + 8.0 * EPS)
        else:
            cos_half = math.cos(0.5 * math.pi * s)
            if abs(cos_half) < 1e-8:
                raise UnsupportedArgumentError(
                    "argument too close to an odd integer for the rewritten right side"
                )
            mirrored = zeta(1.0 - s, ctx)
            lgs = log_gamma(s, ctx)
            pref = math.exp(s * ln2 + s * lnpi - lgs.value) / (2.0 * cos_half)
            rhs = pref * mirrored.value
            rhs_bound = abs(pref) * mirrored.error_bound + abs(rhs) * (lgs.error_bound + 8.0 * EPS)

    tol = identity_tolerance([lhs.error_bound, rhs_bound])
    return IdentityReport.from_sides(f"functional_equation_s={s:g}", lhs.value, rhs, tol)

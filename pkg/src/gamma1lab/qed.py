"""One-loop effective Lagrangians for a constant magnetic field.

Everything is expressed in units of m^4 with b = eB/m^2, so the results
carry no coupling-constant dependence; ``alpha`` enters only when a value
is converted to the beta-function normalization.

Proper-time representations (Wick-rotated, renormalized):

    spinor:  L = -(1/8 pi^2) int_0^inf dt t^{-3} e^{-t}
                     [ b t coth(b t) - 1 - (b t)^2 / 3 ],
    scalar:  L = +(1/16 pi^2) int_0^inf dt t^{-3} e^{-t}
                     [ b t / sinh(b t) + (b t)^2 / 6 - 1 ].

The integrals are split three ways: an exact series patch on [0, t0]
(the bracket expanded in even powers, each moment an incomplete-gamma
series), adaptive quadrature on [t0, T], and a rigorously bounded
discarded tail beyond T = 40 + ln(1 + b^2).

The spinor Lagrangian also has a closed form in terms of zeta'(-1) and
int_1^{1+1/(2b)} ln Gamma, and both kinds have strong-field limits

    spinor:  L -> (b^2 / 24 pi^2) [ ln(2b) + 12 zeta'(-1) - 1 ],
    scalar:  L -> (b^2 / 96 pi^2) [ ln(2b) + 12 zeta'(-1) - 1 + ln 2 ],

each brace rewritable through C and zeta'(2), or through L1, giving the
three cross-regularization variants ``zeta``, ``ritus`` and ``gamma1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .constants import l1_reference
from .gamma import euler_constant, log_gamma
from .kernel import (
    DEFAULT_CONTEXT,
    EPS,
    DomainError,
    IdentityReport,
    PrecisionContext,
    SeriesValue,
    UnsupportedArgumentError,
    bernoulli,
    compensated_sum,
)
from .quadrature import integrate
from .zeta import zeta_prime

__all__ = [
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

ALPHA = 1.0 / 137.035999084  # CODATA fine-structure constant

_REL_TARGET = 1e-13
_SPINOR_PREF = -1.0 / (8.0 * math.pi * math.pi)
_SCALAR_PREF = 1.0 / (16.0 * math.pi * math.pi)

STRONG_VARIANTS = ("zeta", "ritus", "gamma1")
GRID_ROUTES = ("proper_time", "closed_form", "strong_zeta", "strong_ritus", "strong_gamma1")


@dataclass(frozen=True)
class FieldConfig:
    """The magnetic field strength in units of the critical field."""

    b: float
    alpha: float = ALPHA

    def __post_init__(self) -> None:
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise DomainError(f"field strength must be finite and positive, got {self.b!r}")
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise DomainError(f"alpha must be finite and positive, got {self.alpha!r}")


def _as_config(cfg) -> FieldConfig:
    if isinstance(cfg, FieldConfig):
        return cfg
    return FieldConfig(float(cfg))


@dataclass(frozen=True)
class LagrangianPoint:
    """One field strength, every requested route, and their spread."""

    b: float
    proper_time: float | None = None
    closed_form: float | None = None
    strong_zeta: float | None = None
    strong_ritus: float | None = None
    strong_gamma1: float | None = None
    max_pairwise_dev: float | None = None


# --- the proper-time bracket, series and direct forms ---------------------

def _even_coefs(kind: str, count: int) -> list[float]:
    # x coth x       = sum 4^k B_{2k} x^{2k} / (2k)!
    # x / sinh x     = sum (2 - 4^k) B_{2k} x^{2k} / (2k)!
    # brackets start at k = 2 once the renormalization terms are removed.
    out = []
    for k in range(2, 2 + count):
        base = bernoulli(2 * k) / math.factorial(2 * k)
        if kind == "spinor":
            out.append(float(Fraction(4) ** k * base))
        else:
            out.append(float((2 - Fraction(4) ** k) * base))
    return out

_SPINOR_COEFS = _even_coefs("spinor", 18)
_SCALAR_COEFS = _even_coefs("scalar", 18)


def _coth(x: float) -> float:
    if x > 350.0:
        return 1.0
    return 1.0 + 2.0 / math.expm1(2.0 * x)


def _x_over_sinh(x: float) -> float:
    if x > 700.0:
        return 0.0
    return x / math.sinh(x)


def _bracket_spinor(x: float) -> float:
    # x coth x - 1 - x^2/3; the direct form cancels catastrophically for
    # small x, so switch to the even-power series inside |x| < 1/2
    if x < 0.5:
        x2 = x * x
        total = 0.0
        power = x2 * x2
        for c in _SPINOR_COEFS:
            total += c * power
            power *= x2
        return total
    return x * _coth(x) - 1.0 - x * x / 3.0


def _bracket_scalar(x: float) -> float:
    if x < 0.5:
        x2 = x * x
        total = 0.0
        power = x2 * x2
        for c in _SCALAR_COEFS:
            total += c * power
            power *= x2
        return total
    return _x_over_sinh(x) - 1.0 + x * x / 6.0


def _scaled_lower_gamma(a: float, z: float) -> float:
    # gamma(a, z) / z^a = sum_j (-z)^j / (j! (a+j)); z <= 0.1 here
    pieces = []
    num = 1.0
    for j in range(80):
        pieces.append(num / (a + j))
        if abs(num) < 1e-22 * (a + j):
            break
        num *= -z / (j + 1.0)
    return math.fsum(pieces)


def _patch(kind: str, b: float, tau0: float) -> tuple[float, float]:
    # int_0^{t0} t^{-3} e^{-t} bracket(b t) dt with the bracket expanded:
    # sum_k coef_k b^2 (b t0)^{2k-2} * gamma(2k-2, t0)/t0^{2k-2}
    coefs = _SPINOR_COEFS if kind == "spinor" else _SCALAR_COEFS
    xs = b * tau0
    scale = b * b
    pieces: list[float] = []
    xpow = xs * xs
    prev = math.inf
    omitted = 0.0
    for k, coef in enumerate(coefs, start=2):
        term = coef * scale * xpow * _scaled_lower_gamma(2.0 * k - 2.0, tau0)
        if abs(term) >= prev or abs(term) < 1e-25 * max(1.0, scale):
            omitted = abs(term)
            break
        pieces.append(term)
        prev = abs(term)
        xpow *= xs * xs
    else:
        omitted = prev if pieces else 0.0
    value = compensated_sum(pieces) if pieces else 0.0
    bound = omitted + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return value, bound


def _tail_bound(kind: str, b: float, big_t: float) -> float:
    # beyond T the bracket is within O(e^{-2bT}) of its polynomial part;
    # bound each e^{-t} t^{-n} moment by e^{-T} T^{-n}
    damp = math.exp(-big_t)
    if kind == "spinor":
        return 2.0 * damp * (b * b / (3.0 * big_t) + b / (big_t * big_t) + big_t**-3.0)
    return 2.0 * damp * (b * b / (6.0 * big_t) + big_t**-3.0)


def _breakpoints(tau0: float, big_t: float) -> list[float]:
    pts = []
    t = tau0 * 10.0
    while t < 1.0:
        pts.append(t)
        t *= 10.0
    pts.extend(p for p in (1.0, 2.0, 5.0, 10.0, 20.0, 30.0) if tau0 < p < big_t)
    return pts


def _proper_time(kind: str, cfg, ctx: PrecisionContext | None) -> SeriesValue:
    ctx = ctx or DEFAULT_CONTEXT
    cfg = _as_config(cfg)
    b = cfg.b
    tau0 = min(0.1 / b, 0.1)
    big_t = 40.0 + math.log1p(b * b)
    bracket = _bracket_spinor if kind == "spinor" else _bracket_scalar
    pref = _SPINOR_PREF if kind == "spinor" else _SCALAR_PREF

    def integrand(t: float) -> float:
        return math.exp(-t) * bracket(b * t) / (t * t * t)

    patch, patch_bound = _patch(kind, b, tau0)
    bps = _breakpoints(tau0, big_t)

    # pass 1 sets the scale, pass 2 resolves it to a relative target
    coarse = replace(ctx, abs_tol=max(1e-10, 1e-10 * b * b))
    rough = integrate(integrand, tau0, big_t, coarse, breakpoints=bps)
    fine_tol = max(_REL_TARGET * abs(patch + rough.value), 1e-300)
    fine = integrate(integrand, tau0, big_t, replace(ctx, abs_tol=fine_tol), breakpoints=bps)

    raw = compensated_sum([patch, fine.value])
    raw_bound = patch_bound + fine.error_bound + _tail_bound(kind, b, big_t)
    value = pref * raw
    bound = abs(pref) * raw_bound + 4.0 * EPS * abs(value)
    converged = bound <= max(ctx.abs_tol, 1e-11 * abs(value))
    return SeriesValue(value, bound, fine.terms_used, converged)


def lagrangian_proper_time_spinor(cfg, ctx: PrecisionContext | None = None) -> SeriesValue:
    """Renormalized one-loop spinor Lagrangian from the proper-time integral."""
    return _proper_time("spinor", cfg, ctx)


def lagrangian_proper_time_scalar(cfg, ctx: PrecisionContext | None = None) -> SeriesValue:
    """Renormalized one-loop scalar Lagrangian from the proper-time integral."""
    return _proper_time("scalar", cfg, ctx)


# --- closed form and strong-field limits ----------------------------------

def lagrangian_closed_form_spinor(cfg, ctx: PrecisionContext | None = None) -> SeriesValue:
    """The spinor Lagrangian assembled from zeta'(-1) and
    int_1^{1+1/(2b)} ln Gamma, valid at every positive b:

    L = -(1/32 pi^2) { -3 + 4 b^2 (1/3 - 4 zeta'(-1)) + 4 b (ln 2 pi - 1)
          - 2 ln 2b - 4 b ln 2b - (4/3) b^2 ln 2b
          - 16 b^2 int_1^{1+1/(2b)} ln Gamma(x) dx }.
    """
    ctx = ctx or DEFAULT_CONTEXT
    cfg = _as_config(cfg)
    b = cfg.b
    zp = zeta_prime(-1.0, ctx)
    quad = integrate(lambda x: log_gamma(x, ctx).value, 1.0, 1.0 + 0.5 / b, ctx)
    ln2b = math.log(2.0 * b)
    pieces = [
        -3.0,
        4.0 * b * b / 3.0,
        -16.0 * b * b * zp.value,
        4.0 * b * (math.log(2.0 * math.pi) - 1.0),
        -2.0 * ln2b,
        -4.0 * b * ln2b,
        -4.0 / 3.0 * b * b * ln2b,
        -16.0 * b * b * quad.value,
    ]
    brace = compensated_sum(pieces)
    pref = -1.0 / (32.0 * math.pi * math.pi)
    value = pref * brace
    brace_bound = (
        16.0 * b * b * (zp.error_bound + quad.error_bound)
        + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    )
    bound = abs(pref) * brace_bound + 2.0 * EPS * abs(value)
    converged = bound <= max(ctx.abs_tol, 1e-11 * abs(value))
    return SeriesValue(value, bound, quad.terms_used, converged)


def _strong_brace(kind: str, b: float, variant: str, ctx: PrecisionContext) -> tuple[list[float], float]:
    # spinor brace: ln(2b) + 12 zeta'(-1) - 1; scalar adds + ln 2.
    # variants restate the constant block through (C, zeta'(2)) or L1.
    extra = math.log(2.0) if kind == "scalar" else 0.0
    if variant == "zeta":
        zp = zeta_prime(-1.0, ctx)
        return [math.log(2.0 * b), 12.0 * zp.value, -1.0, extra], 12.0 * zp.error_bound
    if variant == "ritus":
        c = euler_constant(ctx)
        zp2 = zeta_prime(2.0, ctx)
        weight = 6.0 / (math.pi * math.pi)
        pieces = [
            math.log(2.0 * b),
            -math.log(2.0),  # ln 2b - ln 2 = ln b, kept split for clarity
            -c.value,
            -math.log(math.pi),
            weight * zp2.value,
            extra,
        ]
        return pieces, c.error_bound + weight * zp2.error_bound
    if variant == "gamma1":
        if kind == "scalar":
            raise UnsupportedArgumentError(
                "the gamma1 rewrite of the strong-field constant is spinor-only; "
                "scalar variants are 'zeta' and 'ritus'"
            )
        # 12 zeta'(-1) - 1 = -12 L1, so the constant block is just -12 L1
        level = l1_reference(ctx)
        return [math.log(2.0 * b), -12.0 * level.value, extra], 12.0 * level.error_bound
    raise DomainError(f"unknown strong-field variant {variant!r}; pick one of {STRONG_VARIANTS}")


def _strong(kind: str, cfg, variant: str, ctx: PrecisionContext | None) -> SeriesValue:
    ctx = ctx or DEFAULT_CONTEXT
    cfg = _as_config(cfg)
    pieces, const_bound = _strong_brace(kind, cfg.b, variant, ctx)
    brace = compensated_sum(pieces)
    scale = cfg.b * cfg.b / ((24.0 if kind == "spinor" else 96.0) * math.pi * math.pi)
    value = scale * brace
    bound = scale * (const_bound + 4.0 * EPS * math.fsum(abs(p) for p in pieces))
    converged = bound <= max(ctx.abs_tol, 1e-11 * abs(value))
    return SeriesValue(value, bound, 1, converged)


def lagrangian_strong_spinor(cfg, variant: str = "zeta", ctx: PrecisionContext | None = None) -> SeriesValue:
    """Leading strong-field spinor Lagrangian (b^2/24 pi^2) [ln 2b + 12 zeta'(-1) - 1]."""
    return _strong("spinor", cfg, variant, ctx)


def lagrangian_strong_scalar(cfg, variant: str = "zeta", ctx: PrecisionContext | None = None) -> SeriesValue:
    """Leading strong-field scalar Lagrangian (b^2/96 pi^2) [ln 2b + 12 zeta'(-1) - 1 + ln 2].

    Variants: 'zeta' or 'ritus'.
    """
    return _strong("scalar", cfg, variant, ctx)


# --- the Gamma-integral limit behind the strong-field constant -------------

def scaled_gamma_integral(b, ctx: PrecisionContext | None = None) -> SeriesValue:
    """b^2 int_1^{1+1/(2b)} ln Gamma(x) dx, which tends to -C/8 as b grows."""
    ctx = ctx or DEFAULT_CONTEXT
    cfg = _as_config(b)
    quad = integrate(lambda x: log_gamma(x, ctx).value, 1.0, 1.0 + 0.5 / cfg.b, ctx)
    scale = cfg.b * cfg.b
    value = scale * quad.value
    bound = scale * quad.error_bound + 2.0 * EPS * abs(value)
    return SeriesValue(value, bound, quad.terms_used, bound <= ctx.abs_tol)


def gamma_integral_limit_residual(b, ctx: PrecisionContext | None = None) -> IdentityReport:
    """How far b^2 int_1^{1+1/(2b)} ln Gamma still is from its limit -C/8.

    The gap closes like 1/b (the next Taylor moment), so the tolerance is
    budgeted as 0.07/b on top of the numerical bounds.
    """
    ctx = ctx or DEFAULT_CONTEXT
    cfg = _as_config(b)
    got = scaled_gamma_integral(cfg, ctx)
    c = euler_constant(ctx)
    limit = -c.value / 8.0
    tol = 0.07 / cfg.b + 10.0 * (got.error_bound + c.error_bound / 8.0)
    return IdentityReport.from_sides(
        f"gamma_integral_limit_b={cfg.b:g}", got.value, limit, tol
    )


# --- grids and the beta-function slope -------------------------------------

def _max_pairwise_dev(values: list[float]) -> float | None:
    if len(values) < 2:
        return None
    worst = 0.0
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            scale = max(abs(values[i]), abs(values[j]))
            if scale > 0.0:
                worst = max(worst, abs(values[i] - values[j]) / scale)
    return worst


def lagrangian_grid(
    kind: str,
    bs,
    routes=None,
    ctx: PrecisionContext | None = None,
) -> list[LagrangianPoint]:
    """Evaluate the requested routes at each field strength."""
    ctx = ctx or DEFAULT_CONTEXT
    if kind not in ("spinor", "scalar"):
        raise DomainError(f"kind must be 'spinor' or 'scalar', got {kind!r}")
    if routes is None:
        routes = GRID_ROUTES if kind == "spinor" else tuple(
            r for r in GRID_ROUTES if r not in ("closed_form", "strong_gamma1")
        )
    for route in routes:
        if route not in GRID_ROUTES:
            raise DomainError(f"unknown route {route!r}; pick from {GRID_ROUTES}")
        if kind == "scalar" and route in ("closed_form", "strong_gamma1"):
            raise UnsupportedArgumentError(f"route {route!r} is only written for the spinor case")

    points = []
    for b in bs:
        cfg = _as_config(b)
        fields: dict[str, float | None] = {r: None for r in GRID_ROUTES}
        if "proper_time" in routes:
            fields["proper_time"] = _proper_time(kind, cfg, ctx).value
        if "closed_form" in routes:
            fields["closed_form"] = lagrangian_closed_form_spinor(cfg, ctx).value
        for variant in STRONG_VARIANTS:
            if f"strong_{variant}" in routes:
                fields[f"strong_{variant}"] = _strong(kind, cfg, variant, ctx).value
        present = [v for v in fields.values() if v is not None]
        points.append(LagrangianPoint(b=cfg.b, max_pairwise_dev=_max_pairwise_dev(present), **fields))
    return points


def beta_log_slope(points, route: str = "strong_zeta", alpha: float = ALPHA) -> float:
    """Least-squares slope of 4 pi alpha L / b^2 against ln b.

    The raw slope; multiply out the one-loop normalization with
    ``beta_slope_normalized`` to land on 1.
    """
    xs, ys = [], []
    for p in points:
        val = getattr(p, route)
        if val is None:
            raise DomainError(f"route {route!r} missing at b={p.b:g}")
        xs.append(math.log(p.b))
        ys.append(4.0 * math.pi * alpha * val / (p.b * p.b))
    if len(xs) < 2:
        raise DomainError("a slope needs at least two field strengths")
    slope, _ = np.polyfit(np.array(xs), np.array(ys), 1)
    return float(slope)


def beta_slope_normalized(
    points, kind: str, route: str = "strong_zeta", alpha: float = ALPHA
) -> float:
    """The slope in units of its one-loop prediction (perfect agreement = 1)."""
    if kind not in ("spinor", "scalar"):
        raise DomainError(f"kind must be 'spinor' or 'scalar', got {kind!r}")
    factor = (6.0 if kind == "spinor" else 24.0) * math.pi / alpha
    return beta_log_slope(points, route, alpha) * factor

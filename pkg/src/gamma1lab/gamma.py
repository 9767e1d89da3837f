"""Log-gamma and generalized log-gamma from Moivre-Stirling asymptotics.

The classical expansion

    ln G(x+1) = ln sqrt(2 pi) + (x + 1/2) ln x - x
                + sum_{k>=1} B_{2k} / ((2k-1)(2k) x^{2k-1})

is divergent-asymptotic: it is summed to its smallest term, and the error
bound reported is the first omitted term.  Arguments below
``SHIFT_THRESHOLD`` are lifted with ln G(x) = ln G(x+1) - ln x first.

The generalized function G1 replaces the factorial's unit increment with
the weight k^k,

    G1(n+1) = 1^1 2^2 3^3 ... n^n,      G1(x+1) = x^x G1(x),

and has the same kind of expansion,

    ln G1(x+1) = L1 + [x(x+1)/2 + 1/12] ln x - x^2/4
                 - sum_{k>=2} B_{2k} / ((2k-2)(2k-1)(2k) x^{2k-2}),

where the constant L1 = 1/12 - zeta'(-1) plays the role ln sqrt(2 pi) plays
for ln G.  L1 is owned by :mod:`gamma1lab.constants`; it is injected here
(lazily, or explicitly per call) so that the independent extrapolation route
for L1 itself never touches this function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .kernel import (
    DEFAULT_CONTEXT,
    EPS,
    CapacityError,
    DomainError,
    PrecisionContext,
    SeriesValue,
    bernoulli_float,
    compensated_sum,
)

__all__ = [
    "SHIFT_THRESHOLD",
    "LOG_SQRT_TWO_PI",
    "GammaConstants",
    "gamma_constants",
    "euler_constant",
    "digamma_at_1",
    "log_gamma",
    "log_gamma1",
    "hyperfactorial",
]

#: Below this the argument is lifted by the recurrence before the series.
SHIFT_THRESHOLD = 10.0

#: ln sqrt(2 pi), the additive constant of the ln G expansion.
LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Hyperfactorial capacity: G1(n+1) for n = 1000 already has ~1.5e6 digits.
_HYPERFACTORIAL_CAP = 1000


@dataclass(frozen=True)
class GammaConstants:
    """Constants owned by this module.  C is Euler's constant; the digamma
    value at 1 is -C."""

    L0: float
    C: float
    shift_threshold: float
    c_error_bound: float


def _require_positive_finite(x: float, what: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{what} requires a positive finite argument, got {x!r}")
    return x


@lru_cache(maxsize=1)
def _euler_constant_cached() -> tuple[float, float, int]:
    # Euler-Maclaurin on the harmonic numbers:
    #   C = H_n - ln(n+1) + 1/(2(n+1)) + sum_k B_{2k} / (2k (n+1)^{2k})
    # At n+1 = 24 the terms bottom out far below unit roundoff.
    n = 23
    big_n = float(n + 1)
    pieces = [1.0 / k for k in range(1, n + 1)]
    pieces.append(-math.log(big_n))
    pieces.append(0.5 / big_n)
    inv_n2 = 1.0 / (big_n * big_n)
    power = inv_n2
    terms = 0
    prev = math.inf
    for k in range(1, 40):
        term = bernoulli_float(2 * k) / (2.0 * k) * power
        if abs(term) >= prev or abs(term) < 1e-22:
            break
        pieces.append(term)
        prev = abs(term)
        power *= inv_n2
        terms += 1
    value = compensated_sum(pieces)
    bound = prev * 0.1 + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return value, bound, n + terms


def euler_constant(ctx: PrecisionContext | None = None) -> SeriesValue:
    """Euler's constant C = 0.5772156649..., from the harmonic-number
    Euler-Maclaurin formula (full binary64 accuracy)."""
    ctx = ctx or DEFAULT_CONTEXT
    value, bound, terms = _euler_constant_cached()
    return SeriesValue(value, bound, terms, bound <= ctx.abs_tol)


def digamma_at_1(ctx: PrecisionContext | None = None) -> SeriesValue:
    """psi(1) = -C."""
    c = euler_constant(ctx)
    return SeriesValue(-c.value, c.error_bound, c.terms_used, c.converged)


def gamma_constants(ctx: PrecisionContext | None = None) -> GammaConstants:
    c = euler_constant(ctx)
    return GammaConstants(
        L0=LOG_SQRT_TWO_PI,
        C=c.value,
        shift_threshold=SHIFT_THRESHOLD,
        c_error_bound=c.error_bound,
    )


def log_gamma(x: float, ctx: PrecisionContext | None = None) -> SeriesValue:
    """ln G(x) for x > 0, by lifted Moivre-Stirling series.

    The Bernoulli tail is summed to its smallest term (or until it falls
    below both the context tolerance and roundoff relevance); the reported
    error bound is the first omitted term plus a roundoff allowance for
    the assembled pieces.
    """
    ctx = ctx or DEFAULT_CONTEXT
    x = _require_positive_finite(x, "log_gamma")

    pieces: list[float] = []
    y = x
    while y < SHIFT_THRESHOLD:
        pieces.append(-math.log(y))  # ln G(y) = ln G(y+1) - ln y
        y += 1.0

    ln_y = math.log(y)
    pieces.extend([LOG_SQRT_TWO_PI, (y - 0.5) * ln_y, -y])

    inv_y2 = 1.0 / (y * y)
    power = 1.0 / y  # y^{-(2k-1)} for k = 1
    cutoff = 0.01 * min(ctx.abs_tol, 1e-15)
    prev = math.inf
    omitted = 0.0
    terms = 0
    for k in range(1, ctx.max_series_terms + 1):
        term = bernoulli_float(2 * k) / ((2.0 * k - 1.0) * 2.0 * k) * power
        if abs(term) >= prev:
            omitted = abs(term)  # series started diverging: stop before it
            break
        if abs(term) < cutoff:
            omitted = abs(term)
            break
        pieces.append(term)
        prev = abs(term)
        power *= inv_y2
        terms += 1
    else:
        omitted = prev

    value = compensated_sum(pieces)
    bound = omitted + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return SeriesValue(value, bound, terms, bound <= ctx.abs_tol)


def _injected_l1() -> tuple[float, float]:
    # Deferred import: constants depends (through zeta) on this module, but
    # only at call time do we need the value back.
    from . import constants as _constants

    ref = _constants.l1_reference()
    return ref.value, ref.error_bound


def log_gamma1(
    x: float,
    ctx: PrecisionContext | None = None,
    l1: float | None = None,
) -> SeriesValue:
    """ln G1(x) for x > 0, by the lifted generalized expansion.

    ``l1`` is the constant L1 = 1/12 - zeta'(-1); when omitted it is taken
    from :func:`gamma1lab.constants.l1_reference`.  Passing it explicitly
    keeps callers that are themselves in the business of *measuring* L1
    honest about what they feed in.
    """
    ctx = ctx or DEFAULT_CONTEXT
    x = _require_positive_finite(x, "log_gamma1")
    if l1 is None:
        l1_value, l1_bound = _injected_l1()
    else:
        l1_value, l1_bound = float(l1), 0.0

    pieces: list[float] = []
    w = x - 1.0  # evaluate ln G1(w+1)
    while w < SHIFT_THRESHOLD:
        u = w + 1.0  # ln G1(w+1) = ln G1(w+2) - (w+1) ln(w+1)
        pieces.append(-u * math.log(u))
        w += 1.0

    ln_w = math.log(w)
    pieces.extend([l1_value, 0.5 * w * (w + 1.0) * ln_w, ln_w / 12.0, -0.25 * w * w])

    inv_w2 = 1.0 / (w * w)
    power = inv_w2  # w^{-(2k-2)} for k = 2
    cutoff = 0.01 * min(ctx.abs_tol, 1e-15)
    prev = math.inf
    omitted = 0.0
    terms = 0
    for k in range(2, ctx.max_series_terms + 2):
        den = (2.0 * k - 2.0) * (2.0 * k - 1.0) * 2.0 * k
        term = -bernoulli_float(2 * k) / den * power
        if abs(term) >= prev or abs(term) < cutoff:
            omitted = abs(term)
            break
        pieces.append(term)
        prev = abs(term)
        power *= inv_w2
        terms += 1
    else:
        omitted = prev

    value = compensated_sum(pieces)
    bound = omitted + l1_bound + 4.0 * EPS * math.fsum(abs(p) for p in pieces)
    return SeriesValue(value, bound, terms, bound <= ctx.abs_tol)


def hyperfactorial(n: int) -> int:
    """Exact G1(n+1) = 1^1 2^2 ... n^n as a Python integer."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError("hyperfactorial takes an integer")
    if n < 0:
        raise DomainError("hyperfactorial takes a non-negative integer")
    if n > _HYPERFACTORIAL_CAP:
        raise CapacityError(
            f"hyperfactorial({n}) exceeds the exact-integer capacity cap {_HYPERFACTORIAL_CAP}"
        )
    out = 1
    for k in range(2, n + 1):
        out *= k**k
    return out

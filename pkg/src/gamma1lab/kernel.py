"""Numeric substrate shared by every module: precision contexts, exact
Bernoulli numbers, compensated summation, and the result records.

Everything downstream runs in plain binary64.  The only exact arithmetic in
the package lives in the Bernoulli table, which hands out
``fractions.Fraction`` so asymptotic-series coefficients are assembled
without rounding until the final float division.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "BudgetError",
    "CapacityError",
    "DomainError",
    "PoleError",
    "UnsupportedArgumentError",
    "PrecisionContext",
    "SeriesValue",
    "IdentityReport",
    "BernoulliTable",
    "bernoulli",
    "bernoulli_float",
    "compensated_sum",
    "EPS",
]

# binary64 unit roundoff
EPS = 2.0 ** -53


class DomainError(ValueError):
    """Argument outside an operation's mathematical domain."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class UnsupportedArgumentError(DomainError):
    """Argument is mathematically fine but outside the supported range."""


class BudgetError(RuntimeError):
    """A series or quadrature budget ran out before reaching tolerance."""


class CapacityError(OverflowError):
    """Exact-arithmetic request beyond the configured capacity."""


@dataclass(frozen=True)
class PrecisionContext:
    """Tolerance and work caps threaded through every numeric routine.

    ``abs_tol`` is the absolute tolerance a routine aims for.  A routine
    must either meet it (and may then report ``converged=True``) or say so:
    truncated asymptotic series return ``converged=False`` with an honest
    ``error_bound``, iterative schemes raise :class:`BudgetError`.  Silently
    returning a degraded value is never an option.
    """

    abs_tol: float = 1e-12
    max_series_terms: int = 400
    max_quadrature_depth: int = 60
    max_em_terms: int = 12

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0.0 and math.isfinite(self.abs_tol)):
            raise DomainError("abs_tol must be a positive finite float")
        if self.max_series_terms < 8:
            raise DomainError("max_series_terms must be at least 8")
        if self.max_quadrature_depth < 4:
            raise DomainError("max_quadrature_depth must be at least 4")
        if self.max_em_terms < 2:
            raise DomainError("max_em_terms must be at least 2")


#: Context used when callers do not pass one.
DEFAULT_CONTEXT = PrecisionContext()


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series / quadrature value plus an honest error bound.

    ``converged`` means ``error_bound <= abs_tol`` of the requesting
    context.  For divergent asymptotic series the bound is the first
    omitted term, which may sit above a very tight tolerance; the flag
    then reports False while the value is still the best available.
    """

    value: float
    error_bound: float
    terms_used: int
    converged: bool

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class IdentityReport:
    """One verified identity: two independently computed sides.

    ``passed`` is defined as ``abs_residual <= tolerance``; it is stored,
    not recomputed, so a report serializes to the same verdict it was
    built with.
    """

    name: str
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool

    @classmethod
    def from_sides(cls, name: str, lhs: float, rhs: float, tolerance: float) -> "IdentityReport":
        abs_residual = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        rel_residual = abs_residual / scale if scale > 0.0 else 0.0
        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            abs_residual=abs_residual,
            rel_residual=rel_residual,
            tolerance=tolerance,
            passed=abs_residual <= tolerance,
        )


def identity_tolerance(bounds: Iterable[float], floor: float = 1e-12) -> float:
    """Pass threshold for an identity built from components with known
    error bounds: 10x the summed bounds, floored so roundoff-level
    residuals on O(1) quantities never flap."""
    return max(floor, 10.0 * math.fsum(abs(b) for b in bounds))


class BernoulliTable:
    """Exact Bernoulli numbers B_0, B_1, B_2, ... with B_1 = -1/2.

    Values come from the Akiyama-Tanigawa triangle, which needs nothing but
    exact rational arithmetic.  The triangle produces the B_1 = +1/2
    convention; the sign is flipped on index 1 since every other index
    agrees between conventions.  (Tests check the table against the
    independent binomial-sum recurrence, which is deliberately *not* the
    algorithm used here.)

    Extension is lock-protected so a shared table can be grown from
    several threads.
    """

    def __init__(self, capacity: int = 1024) -> None:
        if capacity < 2:
            raise DomainError("capacity must be at least 2")
        self._capacity = capacity
        self._lock = threading.Lock()
        # Akiyama-Tanigawa working row; _values[m] = B_m (B_1 already flipped)
        self._row: list[Fraction] = []
        self._values: list[Fraction] = []

    @property
    def capacity(self) -> int:
        return self._capacity

    def __len__(self) -> int:
        return len(self._values)

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("Bernoulli index must be non-negative")
        if n > self._capacity:
            raise CapacityError(
                f"Bernoulli index {n} exceeds exact-arithmetic capacity {self._capacity}"
            )
        if n >= len(self._values):
            with self._lock:
                self._extend_locked(n)
        return self._values[n]

    def _extend_locked(self, n: int) -> None:
        while len(self._values) <= n:
            m = len(self._values)
            self._row.append(Fraction(1, m + 1))
            for j in range(m, 0, -1):
                self._row[j - 1] = j * (self._row[j - 1] - self._row[j])
            head = self._row[0]
            self._values.append(-head if m == 1 else head)


_SHARED_TABLE = BernoulliTable()


def bernoulli(n: int, table: BernoulliTable | None = None) -> Fraction:
    """Exact B_n (B_1 = -1/2 convention; odd n > 1 give 0)."""
    return (table or _SHARED_TABLE).value(n)


def bernoulli_float(n: int, table: BernoulliTable | None = None) -> float:
    return float(bernoulli(n, table))


def compensated_sum(terms: Iterable[float]) -> float:
    """Neumaier-compensated sum of a float stream.

    The carried compensation keeps the error at a small multiple of unit
    roundoff times sum(|t_k|), independent of stream length and ordering;
    in particular (1e16, 1.0, -1e16) sums to exactly 1.0.  Non-finite
    inputs are rejected rather than propagated.
    """
    total = 0.0
    comp = 0.0
    for term in terms:
        if not math.isfinite(term):
            raise DomainError(f"non-finite term in compensated_sum: {term!r}")
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp

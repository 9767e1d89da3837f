"""Kernel plumbing: exact Bernoulli numbers, compensated summation, the
precision context, and the report types everything else leans on."""

import dataclasses
import math
import random
from fractions import Fraction

import pytest

from gamma1lab.kernel import (
    EPS,
    BernoulliTable,
    CapacityError,
    DomainError,
    IdentityReport,
    PrecisionContext,
    SeriesValue,
    bernoulli,
    bernoulli_float,
    compensated_sum,
    identity_tolerance,
)


def bernoulli_by_binomial_sum(limit: int) -> list[Fraction]:
    # independent oracle: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1,
    # a different recurrence from the Akiyama-Tanigawa triangle in kernel
    values = [Fraction(1)]
    for m in range(1, limit + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * values[j]
        values.append(-acc / (m + 1))
    return values


class TestBernoulli:
    def test_against_binomial_recurrence_oracle(self):
        oracle = bernoulli_by_binomial_sum(40)
        for n in range(41):
            assert bernoulli(n) == oracle[n]

    def test_known_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_indices_vanish(self):
        for n in (3, 5, 7, 21, 33):
            assert bernoulli(n) == 0

    def test_float_view(self):
        assert bernoulli_float(2) == pytest.approx(1.0 / 6.0, rel=1e-15)

    def test_capacity_cap(self):
        table = BernoulliTable(capacity=10)
        assert table.value(10) == bernoulli(10)
        with pytest.raises(CapacityError):
            table.value(11)

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            bernoulli(-1)

    def test_tiny_capacity_rejected(self):
        with pytest.raises(DomainError):
            BernoulliTable(capacity=1)


class TestCompensatedSum:
    def test_cancellation_classic(self):
        # naive left-to-right summation returns 0.0 here
        assert compensated_sum([1e16, 1.0, -1e16]) == 1.0

    def test_matches_fsum_on_mixed_magnitudes(self):
        rng = random.Random(20260817)
        for _ in range(20):
            terms = [
                rng.uniform(-1.0, 1.0) * 10.0 ** rng.randint(-8, 12)
                for _ in range(300)
            ]
            rng.shuffle(terms)
            want = math.fsum(terms)
            got = compensated_sum(terms)
            assert abs(got - want) <= 4.0 * EPS * sum(abs(t) for t in terms)

    def test_empty_stream(self):
        assert compensated_sum([]) == 0.0


class TestPrecisionContext:
    def test_defaults(self):
        ctx = PrecisionContext()
        assert ctx.abs_tol == 1e-12
        assert ctx.max_series_terms >= 8

    def test_frozen(self):
        ctx = PrecisionContext()
        with pytest.raises(dataclasses.FrozenInstanceError):
            ctx.abs_tol = 1e-6

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"abs_tol": 0.0},
            {"abs_tol": -1e-9},
            {"abs_tol": math.inf},
            {"max_series_terms": 7},
            {"max_quadrature_depth": 3},
            {"max_em_terms": 1},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            PrecisionContext(**kwargs)


class TestReportTypes:
    def test_series_value_floats(self):
        sv = SeriesValue(2.5, 1e-15, 3, True)
        assert float(sv) == 2.5

    def test_identity_report_from_sides(self):
        rep = IdentityReport.from_sides("demo", 1.0, 1.0 + 1e-13, 1e-12)
        assert rep.abs_residual == pytest.approx(1e-13, rel=1e-3)
        assert rep.rel_residual == pytest.approx(1e-13, rel=1e-3)
        assert rep.passed

    def test_identity_report_failure_flag(self):
        rep = IdentityReport.from_sides("demo", 1.0, 2.0, 1e-12)
        assert not rep.passed
        assert rep.abs_residual == 1.0

    def test_identity_report_zero_sides(self):
        rep = IdentityReport.from_sides("demo", 0.0, 0.0, 1e-12)
        assert rep.rel_residual == 0.0
        assert rep.passed

    def test_identity_tolerance_floor(self):
        assert identity_tolerance([]) == 1e-12
        assert identity_tolerance([1e-20, 1e-21]) == 1e-12

    def test_identity_tolerance_scales_with_bounds(self):
        assert identity_tolerance([2e-12, 3e-12]) == pytest.approx(5e-11, rel=1e-12)

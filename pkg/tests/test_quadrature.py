"""Adaptive Gauss-Kronrod quadrature against integrals with known values."""

import math

import pytest

from gamma1lab.kernel import BudgetError, DomainError, PrecisionContext
from gamma1lab.quadrature import gk15, integrate


class TestGK15:
    def test_exact_on_low_degree_polynomials(self):
        # the 15-point Kronrod rule integrates polynomials up to degree 22
        value, err, _ = gk15(lambda x: 5.0 * x**9 - x**4 + 3.0, 0.0, 2.0)
        want = 5.0 * 2.0**10 / 10.0 - 2.0**5 / 5.0 + 6.0
        assert value == pytest.approx(want, rel=1e-15)
        assert err <= 1e-10

    def test_error_estimate_is_conservative(self):
        value, err, _ = gk15(math.exp, 0.0, 1.0)
        assert abs(value - (math.e - 1.0)) <= max(err, 1e-15)


class TestIntegrate:
    def test_polynomial(self):
        got = integrate(lambda x: x * x, 0.0, 1.0)
        assert got.value == pytest.approx(1.0 / 3.0, abs=1e-14)
        assert got.converged

    def test_sine_arch(self):
        got = integrate(math.sin, 0.0, math.pi)
        assert got.value == pytest.approx(2.0, abs=1e-13)

    def test_log_endpoint_singularity(self):
        # integrable ln-singularity at 0; Kronrod nodes never touch endpoints
        got = integrate(math.log, 0.0, 1.0, PrecisionContext(abs_tol=1e-11))
        assert got.value == pytest.approx(-1.0, abs=1e-10)

    def test_breakpoint_at_kink(self):
        got = integrate(
            lambda x: abs(x - 1.0 / 3.0), 0.0, 1.0, breakpoints=[1.0 / 3.0]
        )
        want = (1.0 / 3.0) ** 2 / 2.0 + (2.0 / 3.0) ** 2 / 2.0
        assert got.value == pytest.approx(want, abs=1e-14)

    def test_breakpoints_outside_range_ignored(self):
        got = integrate(lambda x: x, 0.0, 1.0, breakpoints=[-5.0, 0.0, 1.0, 7.0])
        assert got.value == pytest.approx(0.5, abs=1e-14)

    def test_reversed_endpoints_flip_sign(self):
        fwd = integrate(math.exp, 0.0, 1.0)
        rev = integrate(math.exp, 1.0, 0.0)
        assert rev.value == pytest.approx(-fwd.value, rel=1e-15)

    def test_empty_interval(self):
        got = integrate(math.exp, 2.0, 2.0)
        assert got.value == 0.0
        assert got.converged

    def test_nonfinite_endpoints_rejected(self):
        with pytest.raises(DomainError):
            integrate(math.exp, 0.0, math.inf)

    def test_budget_error_on_hopeless_integrand(self):
        ctx = PrecisionContext(abs_tol=1e-14, max_quadrature_depth=4)
        with pytest.raises(BudgetError):
            integrate(lambda x: math.sin(1.0 / (x + 1e-9)), 0.0, 1.0, ctx)

    def test_error_bound_honest_on_oscillation(self):
        got = integrate(lambda x: math.cos(40.0 * x), 0.0, 1.0)
        want = math.sin(40.0) / 40.0
        assert abs(got.value - want) <= max(got.error_bound, 1e-13)

"""ln Gamma_1 and its integral identities.

Gamma_1 generalizes the factorial one level up: Gamma_1(n+1) is the
hyperfactorial 1^1 2^2 ... n^n, and ln Gamma_1 satisfies the recurrence
ln Gamma_1(x+1) = x ln x + ln Gamma_1(x).  The classical Raabe formula
integrates ln Gamma over a unit window; its Gamma_1 analogue evaluates
int_x^{x+1} ln Gamma_1 in closed form through the constant L1.  This
script shows the recurrence, the hyperfactorial cross-check, both Raabe
formulas, and the half-argument cluster that ties everything to L1.
"""

import math

from gamma1lab import (
    PrecisionContext,
    half_integral_residuals,
    hyperfactorial,
    integral_series_residual,
    l1_reference,
    log_gamma1,
    log_gamma1_half_residual,
    raabe_gamma1_residual,
    raabe_residual,
)


def main() -> None:
    ctx = PrecisionContext()

    print("Hyperfactorials vs the asymptotic series for ln Gamma_1:")
    for n in (3, 5, 8, 12):
        exact = hyperfactorial(n)
        series = log_gamma1(float(n + 1), ctx)
        rel = abs(series.value - math.log(exact)) / math.log(exact)
        print(f"  n = {n:2d}: H(n) = {exact}  rel err {rel:.2e}")
    print()

    print("Recurrence ln Gamma_1(x+1) - x ln x - ln Gamma_1(x):")
    for x in (0.3, 1.7, 6.2):
        above = log_gamma1(x + 1.0, ctx)
        below = log_gamma1(x, ctx)
        print(f"  x = {x:3g}: {above.value - x * math.log(x) - below.value:+.2e}")
    print()

    print("Raabe for ln Gamma, int_x^{x+1} ln Gamma = x ln x - x + ln sqrt(2 pi):")
    for x in (1e-6, 0.5, 1.0, 7.5):
        rep = raabe_residual(x, ctx)
        print(f"  x = {x:8g}: residual {rep.abs_residual:.2e}")
    print()

    l1 = l1_reference(ctx)
    print("The Gamma_1 analogue, int_x^{x+1} ln Gamma_1 =")
    print(f"  (L1 - 1/12) + (x^2/2) ln x - x^2/4, with L1 = {l1.value:.15f}:")
    for x in (0.0, 0.5, 1.0, 2.5):
        rep = raabe_gamma1_residual(x, ctx)
        print(f"  x = {x:3g}: lhs {rep.lhs:+.12f}  residual {rep.abs_residual:.2e}")
    print()

    print("Half-argument cluster (all residuals should sit at roundoff):")
    for rep in half_integral_residuals(ctx):
        print(f"  {rep.name:34s} residual {rep.abs_residual:.2e}")
    rep = log_gamma1_half_residual(ctx)
    print(f"  {rep.name:34s} residual {rep.abs_residual:.2e}")
    print()

    print("ln Gamma_1 from its own integral representation vs the series:")
    for x in (0.5, 1.5):
        rep = integral_series_residual(x, ctx)
        print(f"  x = {x:3g}: residual {rep.abs_residual:.2e}")


if __name__ == "__main__":
    main()

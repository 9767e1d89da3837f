"""Tour of the named constants and their independent routes.

Every constant the library prints is computed at least twice from
structurally different starting points.  This script walks the routes and
shows the spreads, which is the whole point of the package: agreement of
independent evaluations is the evidence that each one is right.
"""

import math

from gamma1lab import (
    PrecisionContext,
    euler_constant,
    glaisher_bundle,
    l1_bundle,
    l1_via_asymptotic,
    zeta_constants,
)
from gamma1lab.gamma import LOG_SQRT_TWO_PI


def main() -> None:
    ctx = PrecisionContext()

    print("Stirling constant L0 = ln sqrt(2 pi)")
    print(f"  {LOG_SQRT_TWO_PI:.15f}")
    print()

    c = euler_constant(ctx)
    print("Euler's constant C, from zeta values (no harmonic-sum truncation):")
    print(f"  C = {c.value:.15f}  (bound {c.error_bound:.1e})")
    print()

    print("L1, the constant of the ln Gamma_1 expansion, three ways:")
    l1 = l1_bundle(ctx)
    print(f"  via zeta'(-1)      {l1.via_zeta_m1.value:.15f}")
    print(f"  via zeta'(2)       {l1.via_zeta_2.value:.15f}")
    print(f"  via asymptotics    {l1.via_asymptotic.value:.15f}")
    print(f"  route spread       {l1.spread:.2e}")
    print()

    print("The asymptotic route converges as the matching point grows:")
    for cutoff in (4, 6, 10, 20):
        est = l1_via_asymptotic(ctx, cutoff=cutoff)
        print(
            f"  x = {cutoff:2d}: {est.value:.15f}"
            f"  (err vs reference {abs(est.value - l1.value.value):.2e})"
        )
    print()

    print("Glaisher's constant A = exp(L1), four ways:")
    gl = glaisher_bundle(ctx)
    print(f"  via zeta'(-1)          {gl.via_zeta_m1.value:.15f}")
    print(f"  via zeta'(2)           {gl.via_zeta_2.value:.15f}")
    print(f"  via the half integral  {gl.via_half_integral.value:.15f}")
    print(f"  via shifted integral   {gl.via_shifted_integral.value:.15f}")
    print(f"  route spread           {gl.spread:.2e}")
    print()

    print("Zeta values the identities lean on:")
    zc = zeta_constants(ctx)
    print(f"  zeta(2)   = {math.pi ** 2 / 6:.15f} (= pi^2/6)")
    print(f"  zeta(3)   = {zc.zeta_3.value:.15f}")
    print(f"  zeta'(2)  = {zc.zeta_prime_2.value:.15f}")
    print(f"  zeta'(-1) = {zc.zeta_prime_m1.value:.15f}")
    print(f"  zeta'(-2) = {zc.zeta_prime_m2.value:.15f}  (= -zeta(3)/(4 pi^2))")


if __name__ == "__main__":
    main()

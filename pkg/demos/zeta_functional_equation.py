"""The functional equation of zeta, checked numerically from both sides.

zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)

For 0 < s < 1 both sides are computed head-on.  For s > 1 the right-hand
side needs zeta at negative arguments (reflection) or, at odd integers,
the analytic limit of a pole-zero pair.  The completed function
xi(s) = (1/2) s(s-1) pi^(-s/2) Gamma(s/2) zeta(s) is evaluated both from
that product and from the Jacobi-theta integral, and its s <-> 1-s
symmetry is shown directly.
"""

from gamma1lab import (
    PrecisionContext,
    functional_equation_residual,
    jacobi_psi,
    theta_symmetry_residual,
    xi_integral,
    xi_product,
)


def main() -> None:
    ctx = PrecisionContext()

    print("Functional equation residuals |lhs - rhs|:")
    for s in (0.3, 0.5, 0.7, 2.0, 3.0):
        rep = functional_equation_residual(s, ctx)
        print(
            f"  s = {s:3g}: lhs {rep.lhs:+.12f}  rhs {rep.rhs:+.12f}"
            f"  residual {rep.abs_residual:.2e}"
        )
    print()

    print("xi(s) from the product formula vs the theta integral:")
    for s in (0.3, 0.5, 2.0):
        prod = xi_product(s, ctx)
        integ = xi_integral(s, ctx)
        print(
            f"  s = {s:3g}: product {prod.value:.15f}  integral {integ.value:.15f}"
            f"  diff {abs(prod.value - integ.value):.2e}"
        )
    print()

    print("xi symmetry under s <-> 1-s:")
    for s in (0.1, 0.25, 0.4):
        a = xi_product(s, ctx)
        b = xi_product(1.0 - s, ctx)
        print(f"  xi({s:4g}) - xi({1.0 - s:4g}) = {a.value - b.value:+.2e}")
    print()

    print("Jacobi theta sum Psi(x) and its modular symmetry")
    print("  2 Psi(x) + 1 = x^(-1/2) (2 Psi(1/x) + 1):")
    for x in (0.5, 0.7, 1.0, 1.3):
        psi = jacobi_psi(x, ctx)
        rep = theta_symmetry_residual(x, ctx)
        print(
            f"  x = {x:3g}: Psi = {psi.value:.15f}  symmetry residual {rep.abs_residual:.2e}"
        )


if __name__ == "__main__":
    main()

"""One effective Lagrangian, three regularizations.

The one-loop correction for a constant magnetic field can be computed as
a proper-time integral, as a closed form built from ln Gamma integrals,
and in the strong-field limit as b^2 ln b with a constant that three
different regularization schemes write through zeta'(-1), through
(C, zeta'(2)), or through L1.  The schemes must agree exactly, and the
proper-time integral must drift onto the strong-field line as b grows.
That is what this script shows, for both spinor and scalar loops.
"""

from gamma1lab import (
    FieldConfig,
    PrecisionContext,
    beta_slope_normalized,
    gamma_integral_limit_residual,
    lagrangian_closed_form_spinor,
    lagrangian_grid,
    lagrangian_proper_time_spinor,
    lagrangian_strong_spinor,
    scaled_gamma_integral,
)


def main() -> None:
    ctx = PrecisionContext()

    print("Calibration at b = 1 (proper time vs closed form, spinor):")
    cfg = FieldConfig(1.0)
    proper = lagrangian_proper_time_spinor(cfg, ctx)
    closed = lagrangian_closed_form_spinor(cfg, ctx)
    rel = abs(proper.value - closed.value) / abs(closed.value)
    print(f"  proper {proper.value:.15e}")
    print(f"  closed {closed.value:.15e}")
    print(f"  relative difference {rel:.2e}")
    print()

    print("Strong-field brace, three ways at b = 100 (spinor):")
    strong_cfg = FieldConfig(100.0)
    for variant in ("zeta", "ritus", "gamma1"):
        val = lagrangian_strong_spinor(strong_cfg, variant, ctx)
        print(f"  {variant:7s} {val.value:.15f}")
    print()

    print("Proper time drifts onto the strong-field line (spinor):")
    points = lagrangian_grid("spinor", (1e2, 1e3, 1e4), ctx=ctx)
    for p in points:
        dev = abs(p.proper_time / p.strong_zeta - 1.0)
        print(
            f"  b = {p.b:6g}: proper {p.proper_time:.6e}  strong {p.strong_zeta:.6e}"
            f"  |ratio - 1| = {dev:.3e}  (x b = {dev * p.b:.2f})"
        )
    print()

    print("Same drift for the scalar loop:")
    for p in lagrangian_grid("scalar", (1e2, 1e3, 1e4), ctx=ctx):
        dev = abs(p.proper_time / p.strong_zeta - 1.0)
        print(f"  b = {p.b:6g}: |ratio - 1| = {dev:.3e}")
    print()

    print("The gamma integral behind the strong-field constant:")
    print("  b^2 int_1^{1+1/(2b)} ln Gamma -> -C/8 = -0.072151958...")
    for b in (1e2, 1e3, 1e4):
        got = scaled_gamma_integral(b, ctx)
        rep = gamma_integral_limit_residual(b, ctx)
        print(f"  b = {b:6g}: {got.value:.12f}  gap {rep.abs_residual:.2e}")
    print()

    print("Beta-function slope from the b^2 ln b growth (1 = one-loop value):")
    grid = [1e2 * 10.0 ** j for j in range(4)]
    for kind in ("spinor", "scalar"):
        pts = lagrangian_grid(kind, grid, routes=("strong_zeta",), ctx=ctx)
        strong_slope = beta_slope_normalized(pts, kind)
        proper_pts = lagrangian_grid(kind, (1e4, 1e5), routes=("proper_time",), ctx=ctx)
        proper_slope = beta_slope_normalized(proper_pts, kind, route="proper_time")
        print(
            f"  {kind:6s}: strong route {strong_slope:.15f}"
            f"  proper-time route {proper_slope:.10f}"
        )


if __name__ == "__main__":
    main()

"""Command-line front end.

Three subcommands share one report model:

* ``constants``   prints every named constant with its error bound,
* ``verify``      runs an identity suite and reports residuals,
* ``lagrangian``  tabulates the one-loop Lagrangian routes over a b-grid.

Output is a plain table by default, a single JSON document with ``--json``,
and the data rows can additionally be written to a CSV file with
``--csv PATH``.  Exit status: 0 when every contained check passes, 1 when
any fails (or a computation aborts), 2 on usage errors.

The user-facing tolerance (``--tol``, default 1e-9) is the pass/fail
threshold surfaced in reports.  Internally everything is computed against
the tighter of 1e-12 and the requested tolerance, so the headroom between
the two absorbs platform rounding differences instead of hiding defects.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import asdict
from datetime import datetime, timezone

from . import __version__
from .constants import glaisher_bundle, l1_bundle, zeta_prime_bridge_residual
from .gamma import (
    LOG_SQRT_TWO_PI,
    digamma_at_1,
    euler_constant,
    hyperfactorial,
    log_gamma,
    log_gamma1,
)
from .identities import (
    half_integral_residuals,
    integral_series_residual,
    log_gamma1_half_residual,
    raabe_gamma1_residual,
    raabe_residual,
)
from .kernel import (
    EPS,
    BudgetError,
    CapacityError,
    DomainError,
    IdentityReport,
    PrecisionContext,
    identity_tolerance,
)
from .qed import (
    GRID_ROUTES,
    beta_slope_normalized,
    gamma_integral_limit_residual,
    lagrangian_closed_form_spinor,
    lagrangian_grid,
    lagrangian_proper_time_scalar,
    lagrangian_proper_time_spinor,
    lagrangian_strong_scalar,
    lagrangian_strong_spinor,
)
from .zeta import (
    functional_equation_residual,
    theta_symmetry_residual,
    xi_integral,
    xi_product,
    zeta,
    zeta_constants,
    zeta_direct,
)

__all__ = ["main"]

# Display precision for tables: 10 significant digits, with a trailing ~
# whenever the error bound makes the last shown digit uncertain.
_SIG = 10

_ROUTE_TOKENS = {
    "proper": "proper_time",
    "proper_time": "proper_time",
    "closed": "closed_form",
    "closed_form": "closed_form",
    "strong-zeta": "strong_zeta",
    "strong_zeta": "strong_zeta",
    "strong-ritus": "strong_ritus",
    "strong_ritus": "strong_ritus",
    "strong-gamma1": "strong_gamma1",
    "strong_gamma1": "strong_gamma1",
}


def _fmt_value(value: float, bound: float) -> str:
    text = f"{value:.{_SIG}g}"
    if bound > 0.0 and value != 0.0:
        unit = 10.0 ** (math.floor(math.log10(abs(value))) - (_SIG - 1))
        if bound > 0.5 * unit:
            text += "~"
    elif bound > 0.5e-10:
        text += "~"
    return text


def _render_table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def _context_for(tol: float) -> PrecisionContext:
    return PrecisionContext(abs_tol=min(1e-12, tol))


def _with_headroom(report: IdentityReport, tol: float) -> IdentityReport:
    # keep the intrinsic tolerance when it is the looser one (limit checks
    # budget their own O(1/b) gap); otherwise surface the user tolerance
    return IdentityReport.from_sides(
        report.name, report.lhs, report.rhs, max(report.tolerance, tol)
    )


def _report(name: str, lhs: float, rhs: float, bounds, tol: float) -> IdentityReport:
    return IdentityReport.from_sides(
        name, lhs, rhs, max(identity_tolerance(bounds), tol)
    )


# --- constants command ------------------------------------------------------

def _constants_rows(ctx: PrecisionContext, tol: float) -> list[dict]:
    rows: list[dict] = []

    def add(name: str, value: float, bound: float) -> None:
        rows.append(
            {"name": name, "value": value, "error_bound": bound, "ok": bound <= tol}
        )

    def add_spread(name: str, spread: float) -> None:
        rows.append(
            {"name": name, "value": spread, "error_bound": 0.0, "ok": spread <= tol}
        )

    add("L0 = ln sqrt(2 pi)", LOG_SQRT_TWO_PI, 2.0 * EPS)
    c = euler_constant(ctx)
    add("C (Euler)", c.value, c.error_bound)

    l1 = l1_bundle(ctx)
    add("L1 via zeta'(-1)", l1.via_zeta_m1.value, l1.via_zeta_m1.error_bound)
    add("L1 via zeta'(2)", l1.via_zeta_2.value, l1.via_zeta_2.error_bound)
    add("L1 via asymptotic", l1.via_asymptotic.value, l1.via_asymptotic.error_bound)
    add_spread("L1 route spread", l1.spread)
    add("L1", l1.value.value, l1.value.error_bound)

    gl = glaisher_bundle(ctx)
    add("A via zeta'(-1)", gl.via_zeta_m1.value, gl.via_zeta_m1.error_bound)
    add("A via zeta'(2)", gl.via_zeta_2.value, gl.via_zeta_2.error_bound)
    add("A via half integral", gl.via_half_integral.value, gl.via_half_integral.error_bound)
    add(
        "A via shifted integral",
        gl.via_shifted_integral.value,
        gl.via_shifted_integral.error_bound,
    )
    add_spread("A route spread", gl.spread)
    add("A (Glaisher)", gl.value.value, gl.value.error_bound)

    z2 = zeta(2.0, ctx)
    add("zeta(2)", z2.value, z2.error_bound)
    zc = zeta_constants(ctx)
    add("zeta(3)", zc.zeta_3.value, zc.zeta_3.error_bound)
    add("zeta'(2)", zc.zeta_prime_2.value, zc.zeta_prime_2.error_bound)
    add("zeta'(-1)", zc.zeta_prime_m1.value, zc.zeta_prime_m1.error_bound)
    add("zeta'(-2)", zc.zeta_prime_m2.value, zc.zeta_prime_m2.error_bound)
    return rows


# --- verify suites ----------------------------------------------------------

def _suite_zeta(ctx: PrecisionContext, tol: float) -> list[IdentityReport]:
    reports = []
    for s in (0.3, 0.5, 2.0, 3.0):
        reports.append(_with_headroom(functional_equation_residual(s, ctx), tol))
    for x in (0.5, 0.7, 1.3):
        reports.append(_with_headroom(theta_symmetry_residual(x, ctx), tol))
    for s in (0.1, 0.25, 0.4):
        a = xi_product(s, ctx)
        b = xi_product(1.0 - s, ctx)
        reports.append(
            _report(
                f"xi_symmetry_s={s:g}",
                a.value,
                b.value,
                [a.error_bound, b.error_bound],
                tol,
            )
        )
    for s in (0.3, 0.5, 2.0):
        by_int = xi_integral(s, ctx)
        by_prod = xi_product(s, ctx)
        reports.append(
            _report(
                f"xi_integral_vs_product_s={s:g}",
                by_int.value,
                by_prod.value,
                [by_int.error_bound, by_prod.error_bound],
                tol,
            )
        )
    reports.append(_with_headroom(zeta_prime_bridge_residual(ctx), tol))
    for s in (3.0, 5.0, 8.0):
        accel = zeta(s, ctx)
        direct = zeta_direct(s, ctx)
        reports.append(
            _report(
                f"eta_vs_direct_s={s:g}",
                accel.value,
                direct.value,
                [accel.error_bound, direct.error_bound],
                tol,
            )
        )
    zc = zeta_constants(ctx)
    reports.append(
        _report(
            "zeta3_vs_zeta_prime_m2",
            zc.zeta_3.value,
            -4.0 * math.pi * math.pi * zc.zeta_prime_m2.value,
            [zc.zeta_3.error_bound, 4.0 * math.pi * math.pi * zc.zeta_prime_m2.error_bound],
            tol,
        )
    )
    return reports


def _suite_gamma(ctx: PrecisionContext, tol: float) -> list[IdentityReport]:
    reports = []
    for x in (0.1, 0.5, 1.5, 7.5, 19.5):
        above = log_gamma(x + 1.0, ctx)
        below = log_gamma(x, ctx)
        reports.append(
            _report(
                f"log_gamma_recurrence_x={x:g}",
                above.value,
                below.value + math.log(x),
                [above.error_bound, below.error_bound],
                tol,
            )
        )
        g1_above = log_gamma1(x + 1.0, ctx)
        g1_below = log_gamma1(x, ctx)
        reports.append(
            _report(
                f"log_gamma1_recurrence_x={x:g}",
                g1_above.value,
                x * math.log(x) + g1_below.value,
                [g1_above.error_bound, g1_below.error_bound],
                tol,
            )
        )
    for s in (0.5, 1.3, 2.7, 7.1):
        whole = log_gamma(s, ctx)
        half = log_gamma(s / 2.0, ctx)
        half_up = log_gamma((s + 1.0) / 2.0, ctx)
        rhs = (
            -0.5 * math.log(math.pi)
            + (s - 1.0) * math.log(2.0)
            + half.value
            + half_up.value
        )
        reports.append(
            _report(
                f"duplication_s={s:g}",
                whole.value,
                rhs,
                [whole.error_bound, half.error_bound, half_up.error_bound],
                tol,
            )
        )
    for s in (0.2, 0.5, 0.8):
        left = log_gamma(s, ctx)
        right = log_gamma(1.0 - s, ctx)
        reports.append(
            _report(
                f"reflection_s={s:g}",
                left.value + right.value,
                math.log(math.pi / math.sin(math.pi * s)),
                [left.error_bound, right.error_bound],
                tol,
            )
        )
    h = 1e-5
    fd = (log_gamma(1.0 + h, ctx).value - log_gamma(1.0 - h, ctx).value) / (2.0 * h)
    reports.append(
        IdentityReport.from_sides(
            "digamma_at_1_finite_difference",
            digamma_at_1(ctx).value,
            fd,
            max(tol, 1e-9),
        )
    )
    for n in (5, 8, 12):
        series = log_gamma1(float(n + 1), ctx)
        exact = math.log(hyperfactorial(n))
        reports.append(
            _report(
                f"hyperfactorial_n={n}",
                series.value,
                exact,
                [series.error_bound, abs(exact) * 2.0 * EPS],
                tol,
            )
        )
    return reports


def _suite_raabe(ctx: PrecisionContext, tol: float) -> list[IdentityReport]:
    reports = []
    for x in (1e-6, 0.5, 1.0, 7.5):
        reports.append(_with_headroom(raabe_residual(x, ctx), tol))
    for x in (0.0, 0.5, 1.0, 2.5):
        reports.append(_with_headroom(raabe_gamma1_residual(x, ctx), tol))
    for x in (0.5, 1.5):
        reports.append(_with_headroom(integral_series_residual(x, ctx), tol))
    for report in half_integral_residuals(ctx):
        reports.append(_with_headroom(report, tol))
    reports.append(_with_headroom(log_gamma1_half_residual(ctx), tol))
    return reports


def _suite_qed(ctx: PrecisionContext, tol: float) -> list[IdentityReport]:
    reports = []
    proper1 = lagrangian_proper_time_spinor(1.0, ctx)
    closed1 = lagrangian_closed_form_spinor(1.0, ctx)
    scale1 = max(abs(proper1.value), abs(closed1.value))
    reports.append(
        IdentityReport.from_sides(
            "spinor_calibration_b=1", proper1.value, closed1.value, 1e-8 * scale1
        )
    )

    proper_of = {
        "spinor": lagrangian_proper_time_spinor,
        "scalar": lagrangian_proper_time_scalar,
    }
    strong_of = {"spinor": lagrangian_strong_spinor, "scalar": lagrangian_strong_scalar}
    for kind in ("spinor", "scalar"):
        for b in (1e2, 1e3, 1e4):
            p = proper_of[kind](b, ctx)
            s = strong_of[kind](b, ctx=ctx)
            # the strong form drops O(b ln b); its relative gap closes like
            # (ln b)/b, enveloped by 10/b on this grid
            reports.append(
                IdentityReport.from_sides(
                    f"{kind}_proper_vs_strong_b={b:g}",
                    p.value,
                    s.value,
                    (10.0 / b) * abs(s.value),
                )
            )
    for b in (1e2, 1e4):
        base = lagrangian_strong_spinor(b, "zeta", ctx)
        for variant in ("ritus", "gamma1"):
            other = lagrangian_strong_spinor(b, variant, ctx)
            reports.append(
                IdentityReport.from_sides(
                    f"spinor_strong_zeta_vs_{variant}_b={b:g}",
                    base.value,
                    other.value,
                    1e-12 * max(abs(base.value), abs(other.value)),
                )
            )
        sc_base = lagrangian_strong_scalar(b, "zeta", ctx)
        sc_other = lagrangian_strong_scalar(b, "ritus", ctx)
        reports.append(
            IdentityReport.from_sides(
                f"scalar_strong_zeta_vs_ritus_b={b:g}",
                sc_base.value,
                sc_other.value,
                1e-12 * max(abs(sc_base.value), abs(sc_other.value)),
            )
        )
    for b in (1e2, 1e3, 1e4):
        reports.append(_with_headroom(gamma_integral_limit_residual(b, ctx), tol))

    strong_grid = [1e2 * 10.0 ** j for j in range(4)]
    for kind in ("spinor", "scalar"):
        pts = lagrangian_grid(kind, strong_grid, routes=("strong_zeta",), ctx=ctx)
        slope = beta_slope_normalized(pts, kind)
        reports.append(
            IdentityReport.from_sides(
                f"beta_slope_{kind}_strong", slope, 1.0, max(tol, 1e-10)
            )
        )
        proper_pts = lagrangian_grid(kind, (1e4, 1e5), routes=("proper_time",), ctx=ctx)
        proper_slope = beta_slope_normalized(proper_pts, kind, route="proper_time")
        reports.append(
            IdentityReport.from_sides(
                f"beta_slope_{kind}_proper", proper_slope, 1.0, 1e-2
            )
        )
    return reports


_SUITES = {
    "zeta": _suite_zeta,
    "gamma": _suite_gamma,
    "raabe": _suite_raabe,
    "qed": _suite_qed,
}


# --- document assembly and emission -----------------------------------------

def _document(command: str, ctx: PrecisionContext, tol: float, sections: list[dict]) -> dict:
    passed = all(
        row.get("ok", row.get("passed", True))
        for section in sections
        for row in section["rows"]
    )
    context = asdict(ctx)
    context["display_tol"] = tol
    return {
        "tool_version": __version__,
        "command": command,
        "timestamp": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        "context": context,
        "pass": passed,
        "sections": sections,
    }


def _print_plain(doc: dict) -> None:
    print(f"gamma1lab {doc['tool_version']}  {doc['command']}")
    ctx = doc["context"]
    print(
        f"generated {doc['timestamp']}  abs_tol={ctx['abs_tol']:g}  "
        f"display_tol={ctx['display_tol']:g}"
    )
    for section in doc["sections"]:
        print()
        print(f"[{section['title']}]")
        if section["kind"] == "constants":
            headers = ["constant", "value", "bound", "status"]
            rows = [
                [
                    r["name"],
                    _fmt_value(r["value"], r["error_bound"]),
                    f"{r['error_bound']:.2e}",
                    "ok" if r["ok"] else "FAIL",
                ]
                for r in section["rows"]
            ]
        elif section["kind"] == "identities":
            headers = ["identity", "lhs", "rhs", "|residual|", "tol", "status"]
            rows = [
                [
                    r["name"],
                    f"{r['lhs']:.{_SIG}g}",
                    f"{r['rhs']:.{_SIG}g}",
                    f"{r['abs_residual']:.2e}",
                    f"{r['tolerance']:.2e}",
                    "pass" if r["passed"] else "FAIL",
                ]
                for r in section["rows"]
            ]
        else:
            headers = ["b"] + list(section["columns"]) + ["max_pairwise_dev"]
            rows = []
            for r in section["rows"]:
                cells = [f"{r['b']:.6g}"]
                for col in section["columns"]:
                    v = r[col]
                    cells.append("" if v is None else f"{v:.{_SIG}g}")
                dev = r["max_pairwise_dev"]
                cells.append("" if dev is None else f"{dev:.3e}")
                rows.append(cells)
        for line in _render_table(headers, rows):
            print(line)
    print()
    print("result:", "pass" if doc["pass"] else "FAIL")


def _write_csv(doc: dict, path: str) -> None:
    with open(path, "w", newline="", encoding="ascii") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        for section in doc["sections"]:
            if section["kind"] == "constants":
                writer.writerow(["name", "value", "error_bound", "ok"])
                for r in section["rows"]:
                    writer.writerow(
                        [r["name"], repr(r["value"]), repr(r["error_bound"]), r["ok"]]
                    )
            elif section["kind"] == "identities":
                writer.writerow(
                    ["name", "lhs", "rhs", "abs_residual", "rel_residual", "tolerance", "passed"]
                )
                for r in section["rows"]:
                    writer.writerow(
                        [
                            r["name"],
                            repr(r["lhs"]),
                            repr(r["rhs"]),
                            repr(r["abs_residual"]),
                            repr(r["rel_residual"]),
                            repr(r["tolerance"]),
                            r["passed"],
                        ]
                    )
            else:
                writer.writerow(["b", *GRID_ROUTES, "max_pairwise_dev"])
                for r in section["rows"]:
                    cells = [repr(r["b"])]
                    for col in GRID_ROUTES:
                        v = r.get(col)
                        cells.append("" if v is None else repr(v))
                    dev = r["max_pairwise_dev"]
                    cells.append("" if dev is None else repr(dev))
                    writer.writerow(cells)


def _emit(doc: dict, args: argparse.Namespace) -> int:
    if args.csv:
        _write_csv(doc, args.csv)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        _print_plain(doc)
    return 0 if doc["pass"] else 1


# --- subcommands -------------------------------------------------------------

def _cmd_constants(args: argparse.Namespace) -> int:
    ctx = _context_for(args.tol)
    rows = _constants_rows(ctx, args.tol)
    doc = _document(
        "constants",
        ctx,
        args.tol,
        [{"title": "printed constants", "kind": "constants", "rows": rows}],
    )
    return _emit(doc, args)


def _cmd_verify(args: argparse.Namespace) -> int:
    ctx = _context_for(args.tol)
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    sections = []
    for name in names:
        reports = _SUITES[name](ctx, args.tol)
        sections.append(
            {
                "title": f"{name} identities",
                "kind": "identities",
                "rows": [asdict(r) for r in reports],
            }
        )
    doc = _document("verify", ctx, args.tol, sections)
    return _emit(doc, args)


def _cmd_lagrangian(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    ctx = _context_for(args.tol)
    if not (0.0 < args.b_min <= args.b_max):
        parser.error("need 0 < --b-min <= --b-max")
    if args.points < 1:
        parser.error("--points must be at least 1")
    if args.routes is None:
        routes = None
    else:
        routes = []
        for token in args.routes.split(","):
            token = token.strip()
            if token not in _ROUTE_TOKENS:
                parser.error(
                    f"unknown route {token!r}; tokens: "
                    + ", ".join(sorted(set(_ROUTE_TOKENS)))
                )
            name = _ROUTE_TOKENS[token]
            if name not in routes:
                routes.append(name)
        routes.sort(key=GRID_ROUTES.index)

    if args.points == 1:
        bs = [args.b_min]
    else:
        lo, hi = math.log10(args.b_min), math.log10(args.b_max)
        bs = [args.b_min]
        bs += [
            10.0 ** (lo + i * (hi - lo) / (args.points - 1))
            for i in range(1, args.points - 1)
        ]
        bs.append(args.b_max)
    try:
        points = lagrangian_grid(args.kind, bs, routes=routes, ctx=ctx)
    except DomainError as exc:
        parser.error(str(exc))
    columns = routes if routes is not None else [
        r
        for r in GRID_ROUTES
        if args.kind == "spinor" or r not in ("closed_form", "strong_gamma1")
    ]
    rows = [asdict(p) for p in points]
    doc = _document(
        "lagrangian",
        ctx,
        args.tol,
        [
            {
                "title": f"{args.kind} lagrangian grid",
                "kind": "grid",
                "columns": columns,
                "rows": rows,
            }
        ],
    )
    return _emit(doc, args)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--tol",
        type=float,
        default=1e-9,
        help="pass/fail tolerance surfaced in reports (default 1e-9)",
    )
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    sub.add_argument("--csv", metavar="PATH", help="also write data rows as CSV")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamma1lab",
        description="verification reports for the gamma1lab special-function library",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_const = sub.add_parser("constants", help="print every named constant with bounds")
    _add_common(p_const)

    p_verify = sub.add_parser("verify", help="run an identity suite")
    p_verify.add_argument(
        "--suite",
        choices=["zeta", "gamma", "raabe", "qed", "all"],
        default="all",
        help="which identity suite to run (default all)",
    )
    _add_common(p_verify)

    p_lag = sub.add_parser("lagrangian", help="tabulate one-loop Lagrangian routes")
    p_lag.add_argument("--kind", choices=["spinor", "scalar"], default="spinor")
    p_lag.add_argument("--b-min", type=float, default=1e2, dest="b_min")
    p_lag.add_argument("--b-max", type=float, default=1e4, dest="b_max")
    p_lag.add_argument("--points", type=int, default=3)
    p_lag.add_argument(
        "--routes",
        default=None,
        help="comma list: proper, closed, strong-zeta, strong-ritus, strong-gamma1",
    )
    _add_common(p_lag)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not (args.tol > 0.0 and math.isfinite(args.tol)):
        parser.error("--tol must be a positive finite float")
    try:
        if args.command == "constants":
            return _cmd_constants(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_lagrangian(args, parser)
    except (BudgetError, CapacityError) as exc:
        print(f"gamma1lab: computation aborted: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"gamma1lab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

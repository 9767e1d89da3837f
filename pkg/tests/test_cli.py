"""Tests for the gamma1lab command line.

Everything runs in-process through cli.main so coverage tools see it; one
test at the end exercises the installed console script for real.
"""

from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from gamma1lab import __version__, cli

CSV_GRID_HEADER = "b,proper_time,closed_form,strong_zeta,strong_ritus,strong_gamma1,max_pairwise_dev"


def run_json(capsys, argv):
    rc = cli.main(argv + ["--json"])
    doc = json.loads(capsys.readouterr().out)
    return rc, doc


class TestConstantsCommand:
    def test_plain_report_passes(self, capsys):
        rc = cli.main(["constants"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "result: pass" in out
        assert "A (Glaisher)" in out
        assert "zeta'(-1)" in out

    def test_json_document_shape(self, capsys):
        rc, doc = run_json(capsys, ["constants", "--tol", "1e-8"])
        assert rc == 0
        assert doc["pass"] is True
        assert doc["command"] == "constants"
        assert doc["tool_version"] == __version__
        assert doc["context"]["abs_tol"] == 1e-12
        assert doc["context"]["display_tol"] == 1e-8
        (section,) = doc["sections"]
        assert section["kind"] == "constants"
        for row in section["rows"]:
            assert row["ok"] is True
            assert row["error_bound"] <= 1e-8

    def test_overtight_tolerance_fails_cleanly(self, capsys):
        # 1e-13 is below the asymptotic route's honest bound, so exactly
        # that row flips to FAIL and the exit code follows
        rc, doc = run_json(capsys, ["constants", "--tol", "1e-13"])
        assert rc == 1
        assert doc["pass"] is False
        bad = [r["name"] for r in doc["sections"][0]["rows"] if not r["ok"]]
        assert bad == ["L1 via asymptotic"]

    def test_budget_exhaustion_aborts_with_code_1(self, capsys):
        rc = cli.main(["constants", "--tol", "1e-15"])
        captured = capsys.readouterr()
        assert rc == 1
        assert "computation aborted" in captured.err
        assert captured.out == ""


class TestVerifyCommand:
    @pytest.mark.parametrize("suite", ["zeta", "gamma", "raabe", "qed"])
    def test_each_suite_passes(self, capsys, suite):
        rc, doc = run_json(capsys, ["verify", "--suite", suite])
        assert rc == 0
        assert doc["pass"] is True
        (section,) = doc["sections"]
        assert section["title"] == f"{suite} identities"
        assert all(row["passed"] for row in section["rows"])

    def test_all_suites_row_count(self, capsys):
        rc, doc = run_json(capsys, ["verify"])
        assert rc == 0
        assert [s["title"] for s in doc["sections"]] == [
            "zeta identities",
            "gamma identities",
            "raabe identities",
            "qed identities",
        ]
        assert sum(len(s["rows"]) for s in doc["sections"]) == 73

    def test_calibration_row(self, capsys):
        rc, doc = run_json(capsys, ["verify", "--suite", "qed"])
        rows = {r["name"]: r for r in doc["sections"][0]["rows"]}
        cal = rows["spinor_calibration_b=1"]
        assert cal["passed"]
        assert cal["abs_residual"] <= cal["tolerance"]
        for b in ("100", "1000", "10000"):
            assert rows[f"spinor_proper_vs_strong_b={b}"]["passed"]
            assert rows[f"scalar_proper_vs_strong_b={b}"]["passed"]

    def test_identities_csv_header(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        rc = cli.main(["verify", "--suite", "raabe", "--csv", str(path)])
        capsys.readouterr()
        assert rc == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "name,lhs,rhs,abs_residual,rel_residual,tolerance,passed"
        assert all(line.endswith(",True") for line in lines[1:])


class TestLagrangianCommand:
    def test_spinor_strong_columns_bitwise_equal(self, capsys, tmp_path):
        path = tmp_path / "grid.csv"
        rc = cli.main(
            [
                "lagrangian",
                "--kind", "spinor",
                "--b-min", "1e2",
                "--b-max", "1e5",
                "--points", "4",
                "--routes", "proper,strong-zeta,strong-ritus,strong-gamma1",
                "--csv", str(path),
            ]
        )
        capsys.readouterr()
        assert rc == 0
        lines = path.read_text().splitlines()
        assert lines[0] == CSV_GRID_HEADER
        assert len(lines) == 5
        for line in lines[1:]:
            b, proper, closed, s_zeta, s_ritus, s_gamma1, dev = line.split(",")
            assert closed == ""
            assert s_zeta == s_ritus == s_gamma1 != ""
            assert float(dev) > 0.0
        assert [line.split(",")[0] for line in lines[1:]] == [
            "100.0", "1000.0", "10000.0", "100000.0",
        ]

    def test_scalar_deviation_column_shrinks(self, capsys):
        rc, doc = run_json(capsys, ["lagrangian", "--kind", "scalar"])
        assert rc == 0
        (section,) = doc["sections"]
        assert section["columns"] == ["proper_time", "strong_zeta", "strong_ritus"]
        devs = [row["max_pairwise_dev"] for row in section["rows"]]
        assert len(devs) == 3
        assert devs[0] > devs[1] > devs[2]
        for row in section["rows"]:
            assert row["closed_form"] is None
            assert row["strong_gamma1"] is None

    def test_scalar_csv_leaves_absent_routes_empty(self, capsys, tmp_path):
        path = tmp_path / "scalar.csv"
        rc = cli.main(["lagrangian", "--kind", "scalar", "--points", "2", "--csv", str(path)])
        capsys.readouterr()
        assert rc == 0
        lines = path.read_text().splitlines()
        assert lines[0] == CSV_GRID_HEADER
        for line in lines[1:]:
            cells = line.split(",")
            assert cells[2] == "" and cells[5] == ""
            assert cells[1] != "" and cells[3] != "" and cells[4] != ""

    def test_single_point_grid(self, capsys):
        rc, doc = run_json(
            capsys, ["lagrangian", "--b-min", "1", "--b-max", "1", "--points", "1"]
        )
        assert rc == 0
        (row,) = doc["sections"][0]["rows"]
        assert row["b"] == 1.0
        assert row["proper_time"] == pytest.approx(row["closed_form"], rel=1e-8)

    def test_route_tokens_deduplicate_and_order(self, capsys):
        rc, doc = run_json(
            capsys,
            ["lagrangian", "--points", "1", "--b-min", "1", "--b-max", "1",
             "--routes", "strong_zeta,proper,strong-zeta"],
        )
        assert rc == 0
        assert doc["sections"][0]["columns"] == ["proper_time", "strong_zeta"]


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--suite", "weak"],
            ["lagrangian", "--b-min", "10", "--b-max", "1"],
            ["lagrangian", "--b-min", "0"],
            ["lagrangian", "--points", "0"],
            ["lagrangian", "--routes", "euler"],
            ["lagrangian", "--kind", "scalar", "--routes", "closed"],
            ["lagrangian", "--kind", "scalar", "--routes", "strong-gamma1"],
            ["constants", "--tol", "-1"],
            ["constants", "--tol", "0"],
            ["constants", "--tol", "inf"],
            [],
        ],
    )
    def test_exit_code_2(self, capsys, argv):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(argv)
        capsys.readouterr()
        assert excinfo.value.code == 2


class TestDeterminism:
    def test_json_stable_modulo_timestamp(self, capsys):
        _, first = run_json(capsys, ["verify", "--suite", "zeta"])
        _, second = run_json(capsys, ["verify", "--suite", "zeta"])
        first.pop("timestamp")
        second.pop("timestamp")
        assert first == second

    def test_csv_stable_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.main(["lagrangian", "--points", "2", "--csv", str(a)])
        cli.main(["lagrangian", "--points", "2", "--csv", str(b)])
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()


def test_console_script_runs():
    exe = shutil.which("gamma1lab")
    assert exe is not None
    proc = subprocess.run(
        [exe, "verify", "--suite", "gamma"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert "result: pass" in proc.stdout

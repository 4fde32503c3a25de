import json
import math
import subprocess
import sys

import pytest

from ellipse_perimeter import read_error_curve_csv
from ellipse_perimeter.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestCompute:
    def test_circle_fagnano(self, capsys):
        rc, out, _ = run(capsys, "compute", "--a", "1", "--b", "1", "--method", "fagnano", "--json")
        assert rc == 0
        payload = json.loads(out)
        assert math.isclose(payload["perimeter"], 2 * math.pi, rel_tol=1e-15)
        assert abs(payload["signed_rel"]) < 1e-12

    def test_flat_cantrell(self, capsys):
        rc, out, _ = run(capsys, "compute", "--a", "1", "--b", "0", "--method", "cantrell", "--json")
        assert rc == 0
        payload = json.loads(out)
        assert math.isclose(payload["perimeter"], 4.0, rel_tol=1e-14)
        assert abs(payload["signed_rel"]) < 1e-9

    def test_high_eccentricity_two_exp(self, capsys):
        rc, out, _ = run(
            capsys, "compute", "--a", "1000", "--b", "1", "--method", "r2-two-exp", "--json"
        )
        assert rc == 0
        assert abs(json.loads(out)["signed_ppm"]) <= 0.6

    def test_euler_ivory_order(self, capsys):
        rc, out, _ = run(
            capsys, "compute", "--a", "3", "--b", "1", "--method", "euler-ivory:2", "--json"
        )
        assert rc == 0
        assert math.isclose(json.loads(out)["perimeter"], 4.25 * math.pi, rel_tol=1e-15)

    def test_text_output_lists_error_units(self, capsys):
        rc, out, _ = run(capsys, "compute", "--a", "2", "--b", "1", "--method", "euler")
        assert rc == 0
        assert "perimeter:" in out and "exact:" in out and "ppm" in out

    def test_unknown_method_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--a", "1", "--b", "1", "--method", "moscato"])
        assert exc.value.code == 2

    def test_invalid_axes_fail_computationally(self, capsys):
        rc, _, err = run(capsys, "compute", "--a", "-1", "--b", "-2", "--method", "euler")
        assert rc == 1
        assert "error:" in err


class TestBenchTable:
    def test_single_cell_json(self, capsys):
        rc, out, _ = run(
            capsys,
            "bench-table",
            "--methods", "euler",
            "--ranges", "low-a",
            "--points", "300",
            "--format", "json",
        )
        assert rc == 0
        rows = json.loads(out)
        assert len(rows) == 1
        assert rows[0]["method"] == "euler"
        assert rows[0]["range_id"] == "low-a"
        assert math.isclose(rows[0]["max_percent"], 11.04714, rel_tol=0.02)

    def test_text_table_to_file(self, capsys, tmp_path):
        out_file = tmp_path / "table.txt"
        rc, _, _ = run(
            capsys,
            "bench-table",
            "--methods", "fagnano,euler",
            "--ranges", "low-a",
            "--points", "200",
            "--out", str(out_file),
        )
        assert rc == 0
        assert "fagnano" in out_file.read_text()

    def test_unknown_range_fails(self, capsys):
        rc, _, err = run(capsys, "bench-table", "--ranges", "nope", "--points", "100")
        assert rc == 1
        assert "unknown range" in err


class TestErrorCurve:
    def test_toy_mesh_csv(self, capsys, tmp_path):
        out_file = tmp_path / "curve.csv"
        rc, _, _ = run(
            capsys,
            "error-curve",
            "--method", "fagnano",
            "--vary-a", "1", "1", "3",
            "--points", "3",
            "--out", str(out_file),
        )
        assert rc == 0
        records = read_error_curve_csv(out_file)
        assert len(records) == 3
        assert records[0].a == 1.0 and records[-1].a == 3.0

    def test_byte_identical_reruns(self, capsys, tmp_path):
        args = [
            "error-curve",
            "--method", "r2-two-exp",
            "--vary-a", "1", "1", "50",
            "--points", "40",
        ]
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(args + ["--out", str(f1)]) == 0
        assert main(args + ["--out", str(f2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() == f2.read_bytes()

    def test_stdout_csv(self, capsys):
        rc, out, _ = run(
            capsys,
            "error-curve",
            "--method", "euler",
            "--vary-b", "2", "1", "2",
            "--points", "2",
        )
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "a,b,h,p_exact,p_approx,signed_rel,abs_rel"
        assert len(lines) == 3


class TestSeriesCount:
    def test_hundred_percent_target(self, capsys):
        rc, out, _ = run(
            capsys, "series-count", "--target-ppm", "1000000", "--points", "100"
        )
        assert rc == 0
        assert out.strip() == "1"

    def test_cap_failure_exit_code(self, capsys):
        rc, _, err = run(
            capsys,
            "series-count",
            "--target-ppm", "1e-12",
            "--vary-a", "1", "1", "10",
            "--points", "30",
            "--cap", "10",
        )
        assert rc == 1
        assert "10 terms" in err


class TestRefit:
    def test_grid_only_one_exp_report(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        rc, out, _ = run(
            capsys,
            "refit",
            "--variant", "one-exp",
            "--fit-points", "150",
            "--eval-points", "300",
            "--no-polish",
            "--out", str(out_file),
        )
        assert rc == 0
        assert "variant:   one-exp" in out
        report = json.loads(out_file.read_text())
        assert report["variant"] == "one-exp"
        assert report["params"]["A"] > 0

    def test_deterministic_given_seed(self, capsys, tmp_path):
        f1, f2 = tmp_path / "r1.json", tmp_path / "r2.json"
        args = [
            "refit", "--variant", "one-exp", "--seed", "9",
            "--fit-points", "150", "--eval-points", "300", "--no-polish",
        ]
        assert main(args + ["--out", str(f1)]) == 0
        assert main(args + ["--out", str(f2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() == f2.read_bytes()


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ellipse_perimeter", "compute",
         "--a", "2", "--b", "1", "--method", "fagnano", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert math.isclose(json.loads(proc.stdout)["perimeter"], 3 * math.pi, rel_tol=1e-15)


def test_missing_subcommand_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "ellipse_perimeter"], capture_output=True, text=True
    )
    assert proc.returncode == 2

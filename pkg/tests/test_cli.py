"""CLI contract: JSON shape, exit codes, CSV row counts, determinism."""

import json

from rellich.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def last_json(out):
    lines = [ln for ln in out.strip().splitlines() if ln.startswith("{")]
    return json.loads(lines[-1])


class TestCheck:
    def test_holds_with_constant(self, capsys):
        code, out = run_cli(capsys, "check", "--N", "5", "--c", "0", "--b", "0",
                            "--p", "2", "--alpha", "0", "--domain", "ball",
                            "--J", "all")
        doc = last_json(out)
        assert code == 0
        assert doc["holds"] is True
        assert doc["best_constant"] == 1.25
        assert doc["schema_version"] == 1
        assert [0, -0.5, 2.5] == doc["critical_alphas"][0]

    def test_boundary_failure_exit2(self, capsys):
        code, out = run_cli(capsys, "check", "--N", "5", "--alpha", "3",
                            "--domain", "ball")
        doc = last_json(out)
        assert code == 2
        assert doc["failing_modes"] == [{"n": 0, "branch": "boundary_obstruction"}]

    def test_precondition_exit1(self, capsys):
        code, out = run_cli(capsys, "check", "--N", "5", "--p", "1",
                            "--alpha", "0", "--domain", "bounded")
        assert code == 1
        assert "error" in last_json(out)

    def test_p_inf_accepted(self, capsys):
        code, out = run_cli(capsys, "check", "--N", "5", "--p", "inf",
                            "--alpha", "1", "--domain", "rn")
        assert code in (0, 2)
        assert last_json(out)["schema_version"] == 1

    def test_tol_env_override(self, capsys, monkeypatch):
        # a point 1e-5 from critical: flagged only under the loose tolerance
        argv = ["check", "--N", "5", "--p", "2", "--alpha", "-0.49999",
                "--domain", "rn"]
        code, _ = run_cli(capsys, *argv)
        assert code == 0
        monkeypatch.setenv("RELLICH_TOL", "1e-3")
        code, _ = run_cli(capsys, *argv)
        assert code == 2

    def test_json_subspace(self, capsys):
        code, out = run_cli(capsys, "check", "--N", "5", "--p", "2",
                            "--alpha", "-0.5", "--domain", "rn", "--J", "ge:1")
        assert code == 0
        assert all(row[0] >= 1 for row in last_json(out)["critical_alphas"])

    def test_alpha_sweep_csv(self, capsys, tmp_path):
        target = tmp_path / "sweep.csv"
        code, out = run_cli(capsys, "check", "--N", "5", "--p", "2",
                            "--domain", "ball", "--sweep-alpha=-2:3:11",
                            "-o", str(target))
        assert code == 0
        doc = last_json(out)
        assert doc["sweep"] == {"holds": 7, "points": 11}
        lines = target.read_text().strip().splitlines()
        assert lines[0] == "alpha,holds,best_constant"
        assert len(lines) == 12
        # alpha = 0 row carries the classical constant
        assert any(ln.startswith("0,1,1.25") for ln in lines)

    def test_alpha_or_sweep_required(self, capsys):
        assert main(["check", "--N", "5", "--p", "2", "--domain", "ball"]) == 64


class TestSpectrum:
    def test_classification_json(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--N", "5", "--c", "0", "--p", "2",
                            "--interval", "unit", "--lambda", "-2.25")
        doc = last_json(out)
        assert code == 0
        assert doc["in_spectrum"] and doc["in_point_certified"]

    def test_complex_lambda(self, capsys):
        # the comma defeats argparse's negative-number heuristic: use '='
        code, out = run_cli(capsys, "spectrum", "--N", "5", "--p", "2",
                            "--interval", "half", "--lambda=-2.25,2")
        assert code == 0
        assert last_json(out)["lambda"] == [-2.25, 2.0]

    def test_sample_row_count(self, capsys, tmp_path):
        target = tmp_path / "region.csv"
        code, _ = run_cli(capsys, "spectrum", "--N", "5", "--p", "2",
                          "--sample", "--xi-max", "5", "-o", str(target))
        assert code == 0
        lines = target.read_text().strip().splitlines()
        assert len(lines) == 1001
        assert lines[0] == "re,im,tag"

    def test_sample_q_cloud(self, capsys, tmp_path):
        from rellich import OperatorParams, in_region, region_section3

        target = tmp_path / "pq.csv"
        code, _ = run_cli(capsys, "spectrum", "--N", "5", "--p", "2",
                          "--sample", "--sample-q", "50", "-o", str(target))
        assert code == 0
        lines = target.read_text().strip().splitlines()
        assert len(lines) == 1051
        region = region_section3(OperatorParams(5), 2)
        q_rows = [ln for ln in lines[1:] if ln.endswith(",Q")]
        assert len(q_rows) == 50
        for ln in q_rows:
            re, im, _ = ln.split(",")
            assert in_region(region, complex(float(re), float(im)))

    def test_classify_A_domain(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--N", "5", "--p", "2",
                            "--domain", "ball", "--J", "ge:1",
                            "--lambda", "-9.25")
        assert code == 0
        assert last_json(out)["in_spectrum"] is True


class TestCounterexample:
    def test_minus_slope(self, capsys):
        code, out = run_cli(capsys, "counterexample", "--N", "5", "--c", "0",
                            "--b", "0", "--p", "2", "--n", "0", "--mode", "minus",
                            "--eps", "0.1,0.05,0.025")
        doc = last_json(out)
        assert code == 0
        assert 0.95 <= doc["slope"] <= 1.05

    def test_boundary_report(self, capsys):
        code, out = run_cli(capsys, "counterexample", "--N", "5", "--p", "2",
                            "--mode", "boundary", "--alpha", "3")
        doc = last_json(out)
        assert code == 0
        assert doc["residual_sup"] < 1e-8 and doc["active"]

    def test_unsupported_regime_exit3(self, capsys):
        code, out = run_cli(capsys, "counterexample", "--N", "5", "--b", "-3",
                            "--p", "2", "--n", "0", "--mode", "minus")
        assert code == 3
        assert last_json(out)["kind"] == "unsupported_regime"

    def test_csv_output(self, capsys, tmp_path):
        target = tmp_path / "ce.csv"
        code, _ = run_cli(capsys, "counterexample", "--N", "5", "--p", "2",
                          "--n", "0", "--mode", "minus", "-o", str(target))
        assert code == 0
        lines = target.read_text().strip().splitlines()
        assert lines[0] == "epsilon,ratio" and len(lines) == 5


class TestVerify:
    def test_rellich_pass(self, capsys):
        code, out = run_cli(capsys, "verify", "rellich", "--N", "5", "--c", "0",
                            "--b", "0", "--p", "2", "--alpha", "0",
                            "--domain", "rn")
        doc = last_json(out)
        assert code == 0 and doc["passed"] and doc["seed"] == 0

    def test_remainder_reports_constant(self, capsys):
        code, out = run_cli(capsys, "verify", "remainder", "--N", "5", "--p", "2",
                            "--alpha", "0")
        doc = last_json(out)
        assert code == 0
        assert "c_rem=0.3125" in doc["claim"]

    def test_critical_pass(self, capsys):
        code, out = run_cli(capsys, "verify", "critical", "--N", "5", "--p", "2",
                            "--n", "0", "--mode", "minus")
        assert code == 0 and last_json(out)["passed"]

    def test_all_targets_run(self, capsys):
        for target, extra in [
            ("hardy", ["--beta", "2"]),
            ("aux", ["--beta", "-2", "--lambda", "1.25"]),
            ("oned", ["--beta", "1"]),
            ("dissipativity", ["--lambda", "1"]),
        ]:
            code, out = run_cli(capsys, "verify", target, "--N", "5", "--p", "2",
                                *extra)
            assert code == 0, (target, out)

    def test_quadrature_override(self, capsys):
        code, out = run_cli(capsys, "verify", "rellich", "--N", "5", "--p", "2",
                            "--alpha", "0", "--domain", "rn",
                            "--quad-nodes", "32", "--quad-rel-tol", "1e-8")
        assert code == 0 and last_json(out)["passed"]


class TestContract:
    def test_usage_exit64(self, capsys):
        assert main(["bogus"]) == 64
        assert main([]) == 64
        assert main(["check", "--N", "5"]) == 64  # missing --alpha

    def test_determinism(self, capsys):
        argv = ["verify", "rellich", "--N", "5", "--p", "2", "--alpha", "0",
                "--domain", "rn", "--seed", "0"]
        _, out1 = run_cli(capsys, *argv)
        _, out2 = run_cli(capsys, *argv)
        assert out1 == out2

    def test_console_entry_point(self):
        import subprocess
        import sys

        r = subprocess.run(
            [sys.executable, "-m", "rellich.cli", "check", "--N", "5",
             "--p", "2", "--alpha", "0", "--domain", "rn"],
            capture_output=True, text=True,
        )
        assert r.returncode == 0
        assert json.loads(r.stdout)["holds"] is True

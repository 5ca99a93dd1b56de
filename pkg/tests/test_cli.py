"""Command-line interface: flags, files, exit codes, output schemas."""

import json
import math

import pytest

from fundfreq.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSynth:
    def test_writes_n_lines(self, tmp_path, capsys):
        out = tmp_path / "sig.txt"
        code, _, _ = run_cli(["synth", "--preset", "1", "--n", "100",
                              "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 100

    def test_same_seed_identical_files(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        for path in (a, b):
            code, _, _ = run_cli(
                ["synth", "--preset", "2", "--n", "64", "--noise", "ma:1,0.5",
                 "--sigma2", "0.25", "--seed", "11", "--out", str(path)],
                capsys,
            )
            assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_n_zero_is_usage_error(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["synth", "--preset", "1", "--n", "0", "--out", str(tmp_path / "x")])
        assert exc_info.value.code == 2

    def test_bad_model_file_is_runtime_error(self, tmp_path, capsys):
        bad = tmp_path / "model.json"
        bad.write_text(json.dumps({"p": 4, "lambda": 2.0,
                                   "amplitudes": [[1, 0]] * 4}))
        code, _, err = run_cli(
            ["synth", "--model-file", str(bad), "--n", "50",
             "--out", str(tmp_path / "y")],
            capsys,
        )
        assert code == 1
        assert "lambda" in err


class TestEstimate:
    @pytest.fixture()
    def clean_file(self, tmp_path, capsys):
        path = tmp_path / "m1.txt"
        run_cli(["synth", "--preset", "1", "--n", "256", "--out", str(path)], capsys)
        return path

    def test_report_schema(self, clean_file, capsys):
        code, out, _ = run_cli(
            ["estimate", "--input", str(clean_file), "--p", "4", "--json"], capsys
        )
        assert code == 0
        report = json.loads(out)
        assert set(report) == {
            "lambda_hat", "amplitudes", "residual_summary", "asym", "trace", "config",
        }
        assert len(report["amplitudes"]) == 4
        assert isinstance(report["trace"]["records"], list)
        assert report["trace"]["records"][0]["iteration"] == 0
        assert 0.0 < report["lambda_hat"] < math.pi / 4

    def test_missing_file(self, capsys):
        code, _, err = run_cli(
            ["estimate", "--input", "/nonexistent/sig.txt", "--p", "4"], capsys
        )
        assert code == 2
        assert "not found" in err

    def test_residuals_export(self, clean_file, tmp_path, capsys):
        res_path = tmp_path / "resid.txt"
        code, _, _ = run_cli(
            ["estimate", "--input", str(clean_file), "--p", "4",
             "--residuals-out", str(res_path)],
            capsys,
        )
        assert code == 0
        values = [float(x) for x in res_path.read_text().split()]
        assert len(values) == 256

    def test_mean_correct_flag(self, tmp_path, capsys):
        # a large DC offset: removable preprocessing, the tone still found
        path = tmp_path / "shifted.txt"
        path.write_text("\n".join(str(5.0 + math.cos(0.3 * t)) for t in range(1, 151)))
        code, out, _ = run_cli(
            ["estimate", "--input", str(path), "--p", "1", "--mean-correct"], capsys
        )
        assert code == 0
        report = json.loads(out)
        assert report["config"]["mean_correct"] is True
        assert abs(report["lambda_hat"] - 0.3) < 0.01


class TestPeriodogram:
    def test_row_count_matches_grid(self, tmp_path, capsys):
        n, p = 200, 4
        path = tmp_path / "sig.txt"
        run_cli(["synth", "--preset", "1", "--n", str(n), "--out", str(path)], capsys)
        code, out, _ = run_cli(
            ["periodogram", "--input", str(path), "--p", str(p)], capsys
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "lambda,I,Q_N"
        expected = sum(
            1 for k in range(1, n // 2 + 1) if 2 * math.pi * k / n < math.pi / p
        )
        assert len(lines) - 1 == expected


class TestSimulate:
    def test_single_rep_runs(self, capsys):
        code, out, _ = run_cli(
            ["simulate", "--preset", "1", "--noise", "iid", "--n", "100",
             "--sigma2", "0.25", "--reps", "1", "--seed", "5"],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,sigma2,average,variance,asym_var_lse,asym_var_mnr,failures"
        assert len(lines) == 2

    def test_thread_invariant_output(self, tmp_path, capsys):
        args = ["simulate", "--preset", "1", "--noise", "ma:1,0.5", "--n", "100",
                "--sigma2", "0.25,1.0", "--reps", "16", "--seed", "9"]
        _, out1, _ = run_cli(args + ["--threads", "1"], capsys)
        _, out3, _ = run_cli(args + ["--threads", "3"], capsys)
        assert out1 == out3

    def test_env_threads_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("FUNDFREQ_THREADS", "2")
        code, out, _ = run_cli(
            ["simulate", "--preset", "2", "--noise", "iid", "--n", "100",
             "--sigma2", "0.25", "--reps", "4", "--seed", "1"],
            capsys,
        )
        assert code == 0

    def test_model_flag_accepts_preset_and_file(self, tmp_path, capsys):
        args = ["--noise", "iid", "--n", "100", "--sigma2", "0.25",
                "--reps", "2", "--seed", "3"]
        _, via_preset, _ = run_cli(["simulate", "--model", "2"] + args, capsys)
        model_file = tmp_path / "m2.json"
        model_file.write_text(json.dumps({
            "p": 4, "lambda": 0.3141,
            "amplitudes": [[4, 2], [3, 1.5], [2, 1.25], [1, 1]],
        }))
        _, via_file, _ = run_cli(
            ["simulate", "--model", str(model_file)] + args, capsys
        )
        assert via_preset == via_file


class TestAsymvar:
    def test_benchmark_values(self, capsys):
        code, out, _ = run_cli(
            ["asymvar", "--preset", "1", "--noise", "iid", "--sigma2", "0.01",
             "--n", "100"],
            capsys,
        )
        assert code == 0
        report = json.loads(out)
        assert report["var_lse"] == pytest.approx(6.36e-10, rel=0.01)
        assert report["var_mnr"] == pytest.approx(1.59e-10, rel=0.01)

    def test_csv_row(self, capsys):
        code, out, _ = run_cli(
            ["asymvar", "--preset", "2", "--noise", "ma:1,0.5", "--sigma2", "1.0",
             "--n", "1000", "--csv"],
            capsys,
        )
        assert code == 0
        header, row = out.strip().splitlines()
        assert header == "n,sigma2,beta_star,delta_g,var_lse,var_mnr"
        fields = row.split(",")
        assert float(fields[4]) == pytest.approx(3.09e-10, rel=0.01)

    def test_idempotent(self, capsys):
        args = ["asymvar", "--preset", "1", "--noise", "iid", "--sigma2", "0.25",
                "--n", "500"]
        _, out1, _ = run_cli(args, capsys)
        _, out2, _ = run_cli(args, capsys)
        assert out1 == out2

"""Command-line surface: flags, exit codes, file formats, determinism."""

import json

import numpy as np
import pytest

from circlenoise.cli import main


def read_csv_paths(path):
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# config: ")
    config = json.loads(lines[0][len("# config: "):])
    header = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return config, header, rows


class TestSample:
    def test_bridge_sample_shape(self, tmp_path, capsys):
        out = tmp_path / "p.csv"
        code = main(["sample", "--process", "bridge", "--trunc", "512", "--grid", "2048",
                     "--reps", "10", "--seed", "7", "--out", str(out)])
        assert code == 0
        config, header, rows = read_csv_paths(out)
        assert config["N"] == 512 and config["R"] == 10 and config["seed"] == 7
        assert len(header) == 2049 and header[0] == "replicate" and header[1] == "t0"
        assert len(rows) == 10
        assert "endpoint variance" in capsys.readouterr().out

    def test_levy_sample_pins_origin_column(self, tmp_path):
        out = tmp_path / "p.csv"
        assert main(["sample", "--process", "levy", "--trunc", "64", "--grid", "256",
                     "--reps", "5", "--out", str(out)]) == 0
        _, _, rows = read_csv_paths(out)
        t0 = np.array([float(r[1]) for r in rows])
        assert np.max(np.abs(t0)) <= 1e-12

    def test_white_noise_has_no_paths(self, tmp_path, capsys):
        code = main(["sample", "--process", "white-noise", "--out", str(tmp_path / "x.csv")])
        assert code != 0
        assert "pair" in capsys.readouterr().err

    def test_fft_grid_precondition(self, tmp_path, capsys):
        code = main(["sample", "--process", "bridge", "--trunc", "1024", "--grid", "2048",
                     "--reps", "2", "--out", str(tmp_path / "x.csv")])
        assert code != 0
        assert "2*trunc+1" in capsys.readouterr().err

    def test_naive_method_allows_small_grid(self, tmp_path):
        assert main(["sample", "--process", "bridge", "--trunc", "16", "--grid", "24",
                     "--reps", "2", "--method", "naive",
                     "--out", str(tmp_path / "p.csv")]) == 0

    def test_unknown_process_rejected(self):
        with pytest.raises(SystemExit):
            main(["sample", "--process", "ornstein"])

    def test_unwritable_output(self, capsys):
        code = main(["sample", "--process", "bridge", "--trunc", "8", "--grid", "32",
                     "--reps", "2", "--out", "/nonexistent-dir/p.csv"])
        assert code == 2
        assert "cannot write" in capsys.readouterr().err


class TestVerify:
    def test_identity_suite_exit_zero(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main(["verify", "--suite", "identity", "--out", str(out)])
        assert code == 0
        data = json.loads(out.read_text())
        assert data["overall_pass"] is True
        assert all(c["pass"] for c in data["checks"])

    def test_reports_are_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["verify", "--suite", "degeneracy", "--seed", "42", "--reps", "2000"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_low_reps_policy(self, capsys):
        code = main(["verify", "--suite", "covariance", "--reps", "100"])
        assert code == 2
        assert "reps >= 1000" in capsys.readouterr().err

    def test_unknown_suite_rejected(self):
        with pytest.raises(SystemExit):
            main(["verify", "--suite", "everything"])

    def test_stdout_report_when_no_out(self, capsys):
        code = main(["verify", "--suite", "identity"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["suite"] == "identity"

    def test_fresh_seed_announces_itself(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        code = main(["verify", "--suite", "identity", "--fresh-seed", "--out", str(out)])
        assert code == 0
        stdout = capsys.readouterr().out
        assert "fresh master seed:" in stdout
        seed = int(stdout.split("fresh master seed:")[1].split()[0])
        assert json.loads(out.read_text())["config"]["seed"] == seed


class TestSpectrum:
    def test_levy_uniform_sixteen(self, tmp_path, capsys):
        out = tmp_path / "s.csv"
        code = main(["spectrum", "--kernel", "levy", "--grid", "16", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "index,eigenvalue"
        assert len(lines) == 18
        stdout = capsys.readouterr().out
        near_zero = int(stdout.rsplit("near_zero", 1)[1].split("=")[1])
        assert near_zero >= 7

    def test_bridge_grid_without_zero_is_positive(self, tmp_path, capsys):
        out = tmp_path / "s.csv"
        code = main(["spectrum", "--kernel", "bridge", "--grid", "16", "--drop-zero",
                     "--out", str(out)])
        assert code == 0
        eig = [float(line.split(",")[1]) for line in out.read_text().splitlines()[2:]]
        assert len(eig) == 15
        assert min(eig) > 0.0

    def test_single_point_levy(self, tmp_path):
        out = tmp_path / "s.csv"
        assert main(["spectrum", "--kernel", "levy", "--points", "0.3",
                     "--out", str(out)]) == 0
        line = out.read_text().splitlines()[2]
        assert float(line.split(",")[1]) == pytest.approx(0.3)

    def test_oversized_grid_rejected(self, capsys):
        assert main(["spectrum", "--kernel", "min", "--grid", "5000"]) == 2
        assert "4096" in capsys.readouterr().err


class TestBench:
    def test_small_sizes_agree(self, capsys):
        code = main(["bench", "--sizes", "8:32,16:64"])
        assert code == 0
        out = capsys.readouterr().out
        rows = [line.split() for line in out.splitlines()[1:]]
        assert len(rows) == 2
        assert all(float(r[-1]) <= 1e-9 for r in rows)

    def test_bad_sizes_rejected(self, capsys):
        assert main(["bench", "--sizes", "64:128"]) == 2  # M = 2N violates M >= 2N+1
        assert main(["bench", "--sizes", "nonsense"]) == 2

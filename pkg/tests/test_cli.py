"""
Tests for the command-line front end.
"""
import json

import pytest

from cli.main import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    """Tests for the compute command."""

    def test_ps_two_by_two(self, capsys, sample_file):
        """Test ps on [[1, 2], [3, 4]] prints coeffs and det."""
        code, out, _ = _run(capsys, "compute", "--input", str(sample_file("int_2x2")), "--algorithm", "ps")
        assert code == 0
        report = json.loads(out)
        assert report["coeffs"] == ["-2", "-5", "1"]
        assert report["det"] == "-2"
        assert "adjugate" not in report

    def test_adjugate_and_counts(self, capsys, sample_file):
        """Test --adjugate and --count-ops."""
        code, out, _ = _run(capsys, "compute", "--input", str(sample_file("int_2x2")),
                            "--algorithm", "fl", "--adjugate", "--count-ops")
        assert code == 0
        report = json.loads(out)
        assert report["adjugate"] == [["4", "-2"], ["-3", "1"]]
        assert report["ops"]["full_matmul"] == 1

    def test_bareiss_prints_det_only(self, capsys, sample_file):
        """Test a determinant-only algorithm omits coeffs."""
        code, out, _ = _run(capsys, "compute", "--input", str(sample_file("int_2x2")), "--algorithm", "bareiss")
        assert code == 0
        report = json.loads(out)
        assert "coeffs" not in report
        assert report["det"] == "-2"

    def test_text_output(self, capsys, sample_file):
        """Test the text format."""
        code, out, _ = _run(capsys, "compute", "--input", str(sample_file("int_2x2")),
                            "--algorithm", "berkowitz", "--output", "text")
        assert code == 0
        assert "coeffs: -2 -5 1" in out
        assert "det: -2" in out

    def test_polynomial_entries(self, capsys, sample_file):
        """Test the polynomial sample through ps."""
        code, out, _ = _run(capsys, "compute", "--input", str(sample_file("polyint_2x2")), "--algorithm", "ps")
        assert code == 0
        report = json.loads(out)
        assert report["coeffs"][-1] == ["1"]

    def test_rational_hessenberg(self, capsys, sample_file):
        """Test hessenberg agrees with ps on the rational sample."""
        path = str(sample_file("rational_3x3"))
        _, out_ps, _ = _run(capsys, "compute", "--input", path, "--algorithm", "ps")
        code, out_h, _ = _run(capsys, "compute", "--input", path, "--algorithm", "hessenberg")
        assert code == 0
        assert json.loads(out_h)["coeffs"] == json.loads(out_ps)["coeffs"]

    def test_characteristic_error(self, capsys, sample_file):
        """Test fl over Z/6Z exits 2 naming the divisor."""
        code, _, err = _run(capsys, "compute", "--input", str(sample_file("intmod6_3x3")), "--algorithm", "fl")
        assert code == 2
        assert "divide exactly by 2" in err

    def test_berkowitz_over_mod6(self, capsys, sample_file):
        """Test berkowitz runs where fl cannot."""
        code, _, _ = _run(capsys, "compute", "--input", str(sample_file("intmod6_3x3")), "--algorithm", "berkowitz")
        assert code == 0

    def test_oracle_size_limit(self, capsys, sample_file):
        """Test the oracle refuses the 9×9 sample."""
        code, _, err = _run(capsys, "compute", "--input", str(sample_file("int_9x9")), "--algorithm", "oracle")
        assert code == 2
        assert "n <= 8" in err

    def test_hessenberg_over_integers(self, capsys, sample_file):
        """Test a ring/algorithm mismatch exits 2."""
        code, _, _ = _run(capsys, "compute", "--input", str(sample_file("int_2x2")), "--algorithm", "hessenberg")
        assert code == 2

    def test_bad_m(self, capsys, sample_file):
        """Test an out-of-range block size exits 2."""
        code, _, _ = _run(capsys, "compute", "--input", str(sample_file("int_2x2")), "--m", "5")
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        """Test an unreadable input exits 1."""
        code, _, err = _run(capsys, "compute", "--input", str(tmp_path / "none.json"))
        assert code == 1
        assert err.startswith("error:")

    def test_malformed_file(self, capsys, tmp_path):
        """Test a shape mismatch exits 1."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"ring": {"kind": "int"}, "n": 2, "rows": [["1"]]}), encoding="utf-8")
        code, _, _ = _run(capsys, "compute", "--input", str(path))
        assert code == 1

    def test_undecodable_file(self, capsys, tmp_path):
        """Test a non-UTF-8 file exits 1 with the byte offset."""
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"ring": {"kind": "int"}, "n": 1, "rows": [["\xe9"]]}')
        code, _, err = _run(capsys, "compute", "--input", str(path))
        assert code == 1
        assert err.startswith(f"error: {path}: byte ")

    def test_unknown_algorithm(self, capsys, sample_file):
        """Test argparse rejects unknown names."""
        with pytest.raises(SystemExit) as exc_info:
            main(["compute", "--input", str(sample_file("int_2x2")), "--algorithm", "magic"])
        assert exc_info.value.code == 2


class TestBench:
    """Tests for the bench command."""

    def test_csv_to_stdout(self, capsys):
        """Test three agreeing records at n = 10."""
        code, out, _ = _run(capsys, "bench", "--ring", "int", "--sizes", "10",
                            "--algorithms", "ps,fl,berkowitz", "--seed", "42", "--quiet")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,ring,algorithm,seed,rep,wall_seconds,full_matmul,ring_mul,ring_divexact,digest"
        assert len(lines) == 4
        assert len({line.rsplit(",", 1)[1] for line in lines[1:]}) == 1

    def test_json_to_file(self, capsys, tmp_path):
        """Test --emit json --out."""
        path = tmp_path / "out" / "bench.json"
        code, _, _ = _run(capsys, "bench", "--ring", "intmod:101", "--sizes", "3,5",
                          "--algorithms", "ps,hessenberg,lu", "--emit", "json", "--out", str(path), "--quiet")
        assert code == 0
        data = json.loads(path.read_text(encoding="utf-8"))
        assert [(r["n"], r["algorithm"]) for r in data] == [
            (3, "ps"), (3, "hessenberg"), (3, "lu"), (5, "ps"), (5, "hessenberg"), (5, "lu"),
        ]
        assert all(r["ring"] == "intmod:101" for r in data)

    def test_deterministic(self, capsys):
        """Test identical flags give identical digests and counters."""
        argv = ["bench", "--sizes", "4,6", "--reps", "2", "--seed", "9", "--emit", "json", "--quiet"]
        _, first, _ = _run(capsys, *argv)
        _, second, _ = _run(capsys, *argv)
        strip = [{k: v for k, v in r.items() if k != "wall_seconds"} for r in json.loads(first)]
        again = [{k: v for k, v in r.items() if k != "wall_seconds"} for r in json.loads(second)]
        assert strip == again

    def test_adjugate_flag(self, capsys):
        """Test --adjugate runs the FFLU solve alongside ps."""
        code, out, _ = _run(capsys, "bench", "--sizes", "4", "--algorithms", "ps,bareiss",
                            "--adjugate", "--emit", "json", "--quiet")
        assert code == 0
        assert [r["algorithm"] for r in json.loads(out)] == ["ps", "bareiss"]

    def test_adjugate_with_lu(self, capsys):
        """Test --adjugate with lu exits 2."""
        code, _, _ = _run(capsys, "bench", "--ring", "rational", "--sizes", "3",
                          "--algorithms", "lu", "--adjugate", "--quiet")
        assert code == 2

    def test_summary(self, capsys):
        """Test --summary prints the grid to stderr."""
        code, _, err = _run(capsys, "bench", "--sizes", "3", "--algorithms", "ps,fl", "--summary", "--quiet")
        assert code == 0
        assert "ps" in err and "fl" in err

    def test_inapplicable_ring(self, capsys):
        """Test lu over Z exits 2."""
        code, _, _ = _run(capsys, "bench", "--sizes", "3", "--algorithms", "lu", "--quiet")
        assert code == 2

    def test_bad_ring_flag(self, capsys):
        """Test a malformed --ring is a usage error."""
        with pytest.raises(SystemExit) as exc_info:
            main(["bench", "--ring", "intmod:1", "--sizes", "3"])
        assert exc_info.value.code == 2

    def test_mismatch_exits_3(self, capsys, monkeypatch):
        """Test a disagreement exits 3."""
        import src.bench.harness as harness
        from src.bench import Algorithm, RunResult

        real = harness.run_algorithm

        def broken(algorithm, a, counter, **kwargs):
            result = real(algorithm, a, counter, **kwargs)
            if algorithm == Algorithm.BERKOWITZ:
                return RunResult(algorithm=algorithm, coeffs=result.coeffs,
                                 det=a.ring.add(result.det, a.ring.one))
            return result

        monkeypatch.setattr(harness, "run_algorithm", broken)
        code, _, err = _run(capsys, "bench", "--sizes", "4", "--quiet")
        assert code == 3
        assert "mismatch" in err

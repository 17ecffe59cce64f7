"""CLI contract: exit codes, determinism, JSON round-trips, check filtering."""

import json

import pytest

from parahiggs.cli import main
from parahiggs.higgs import HiggsField


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDims:
    def test_sp_spot_row(self, capsys):
        code, out, _ = run(capsys, "dims", "--group", "sp", "-m", "1", "-g", "2", "-n", "1")
        assert code == 0
        assert out.splitlines()[0] == "group,m,g,n,dimH,dimM,prym,dimN,verdict"
        assert out.splitlines()[1] == "sp,1,2,1,4,4,4,8,PASS"

    def test_so_even_spot_row(self, capsys):
        code, out, _ = run(capsys, "dims", "--group", "so-even", "-m", "2", "-g", "2", "-n", "1")
        assert code == 0
        assert out.splitlines()[1] == "so-even,2,2,1,8,8,8,16,PASS"

    def test_so_odd_spot_row(self, capsys):
        code, out, _ = run(capsys, "dims", "--group", "so-odd", "-m", "1", "-g", "2", "-n", "1")
        assert code == 0
        assert out.splitlines()[1] == "so-odd,1,2,1,4,4,4,8,PASS"

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run(capsys, "dims", "--group", "sp", "-m", "1", "-g", "1", "-n", "1")
        assert code == 2
        assert "error" in err

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "dims", "--group", "sp", "-m", "1:2", "-g", "2", "-n", "1", "--format", "json"
        )
        assert code == 0
        reports = json.loads(out)
        assert [r["m"] for r in reports] == [1, 2]
        assert all(r["verdict"] == "PASS" for r in reports)


class TestSweep:
    def test_full_box(self, capsys):
        code, out, _ = run(capsys, "sweep")
        assert code == 0
        rows = out.strip().splitlines()
        assert len(rows) == 1 + 240
        # lexicographic in (group, m, g, n)
        assert rows[1].startswith("so-even,1,2,1")
        assert rows[-1].startswith("sp,4,6,4")

    def test_markdown(self, capsys):
        code, out, _ = run(capsys, "sweep", "-m", "1", "-g", "2", "-n", "1", "--format", "md")
        assert code == 0
        assert out.splitlines()[0].startswith("| group |")
        assert len(out.strip().splitlines()) == 2 + 3


class TestGen:
    def test_deterministic_bytes(self, tmp_path, capsys):
        args = ("gen", "--group", "sp", "-m", "2", "--marked", "0,1", "--deg-bound", "2", "--seed", "42")
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        assert run(capsys, *args, "-o", str(f1))[0] == 0
        assert run(capsys, *args, "-o", str(f2))[0] == 0
        assert f1.read_bytes() == f2.read_bytes()
        doc = json.loads(f1.read_text())
        assert doc["seed"] == 42
        assert doc["group"] == "sp"

    def test_generated_field_analyzes_clean(self, tmp_path, capsys):
        path = tmp_path / "f.json"
        run(capsys, "gen", "--group", "so-even", "-m", "2", "--marked", "0,1", "--seed", "7", "-o", str(path))
        code, out, _ = run(capsys, "analyze", str(path))
        assert code == 0
        assert "overall: PASS" in out

    def test_duplicate_points_exit_2(self, capsys):
        code, _, err = run(capsys, "gen", "--group", "sp", "-m", "1", "--marked", "0,0", "--seed", "1")
        assert code == 2
        assert "duplicate" in err

    def test_so_odd_char_divisible_by_x(self, tmp_path, capsys):
        path = tmp_path / "f.json"
        run(capsys, "gen", "--group", "so-odd", "-m", "1", "--marked", "0", "--seed", "3", "-o", str(path))
        fld = HiggsField.from_dict(json.loads(path.read_text()))
        assert fld.char_data().coeffs[-1].is_zero


class TestAnalyze:
    @pytest.fixture()
    def sp_field(self, tmp_path, capsys):
        path = tmp_path / "sp.json"
        run(capsys, "gen", "--group", "sp", "-m", "1", "--marked", "0", "--seed", "5", "-o", str(path))
        capsys.readouterr()
        return path

    def test_checks_filter(self, sp_field, capsys):
        code, out, _ = run(capsys, "analyze", str(sp_field), "--checks", "parity", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert list(report["checks"]) == ["parity"]

    def test_negative_control_exit_1(self, tmp_path, capsys):
        bad = {
            "group": "sp",
            "m": 1,
            "marked_points": ["0"],
            "matrix": [
                [{"num": ["1"], "den": ["0", "1"]}, {"num": [], "den": ["1"]}],
                [{"num": [], "den": ["1"]}, {"num": ["-1"], "den": ["0", "1"]}],
            ],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, out, _ = run(capsys, "analyze", str(path))
        assert code == 1
        assert "strong-parabolic: FAIL" in out

    def test_malformed_json_exit_2(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        assert run(capsys, "analyze", str(path))[0] == 2

    def test_pfaffian_on_sp_requested_explicitly_is_usage_error(self, sp_field, capsys):
        code, _, err = run(capsys, "analyze", str(sp_field), "--checks", "pfaffian")
        assert code == 2
        assert "so-even" in err


class TestReduceOdd:
    def test_reduce_then_analyze(self, tmp_path, capsys):
        src = tmp_path / "odd.json"
        red = tmp_path / "reduced.json"
        run(capsys, "gen", "--group", "so-odd", "-m", "1", "--marked", "0", "--deg-bound", "1", "--seed", "9", "-o", str(src))
        code, _, _ = run(capsys, "reduce-odd", str(src), "-o", str(red))
        assert code == 0
        doc = json.loads(red.read_text())
        assert doc["group"] == "sp"
        assert doc["reduction_report"]["char_identity"] == "PASS"
        assert doc["reduction_report"]["induced_gram_skew"] == "PASS"
        # skewness holds through the membership checker on the reduced field
        code, out, _ = run(capsys, "analyze", str(red), "--checks", "membership,parity")
        assert code == 0
        assert "membership: PASS" in out

    def test_wrong_group_exit_2(self, tmp_path, capsys):
        path = tmp_path / "sp.json"
        run(capsys, "gen", "--group", "sp", "-m", "1", "--marked", "0", "--seed", "2", "-o", str(path))
        code, _, err = run(capsys, "reduce-odd", str(path))
        assert code == 2
        assert "wrong group" in err


class TestRoundTrips:
    def test_field_json_roundtrip_through_cli(self, tmp_path, capsys):
        path = tmp_path / "f.json"
        run(capsys, "gen", "--group", "so-odd", "-m", "2", "--marked", "0,1/2", "--seed", "1", "-o", str(path))
        doc = json.loads(path.read_text())
        fld = HiggsField.from_dict(doc)
        again = fld.to_dict()
        for key in ("group", "m", "marked_points", "matrix"):
            assert again[key] == doc[key]

"""CLI surface: subcommands, formats, and the exit-code contract."""

import json
import subprocess
import sys

import pytest

import erdos_straus.cli as cli
import erdos_straus.scan as scan_module
from erdos_straus import SolutionType, k_table, k_table_csv, k_table_json
from erdos_straus.cli import main


class TestCheck:
    def test_json_output(self, capsys):
        assert main(["check", "41", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["p"] == 41
        hit = [w for w in data["witnesses"] if (w["x"], w["d"]) == (14, 1)]
        assert hit == [
            {"p": 41, "x": 14, "d": 1, "k": 3, "type": "II", "y": 41, "z": 574, "identity": True}
        ]

    def test_text_output(self, capsys):
        assert main(["check", "2"]) == 0
        out = capsys.readouterr().out
        assert "x=1" in out and "y=2 z=2" in out

    def test_composite_rejected(self, capsys):
        assert main(["check", "4"]) == 2
        assert "error" in capsys.readouterr().err


class TestSolve:
    def test_json_output(self, capsys):
        assert main(["solve", "5", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"n": 5, "solutions": [[2, 4, 20], [2, 5, 10]]}

    def test_text_output(self, capsys):
        assert main(["solve", "4"]) == 0
        out = capsys.readouterr().out
        assert "3 solution(s)" in out

    def test_domain_errors(self, capsys):
        assert main(["solve", "1"]) == 2
        assert main(["solve", "100001"]) == 2
        capsys.readouterr()


class TestScan:
    def test_writes_records_and_summary(self, tmp_path, capsys):
        out = tmp_path / "scan.jsonl"
        assert main(["scan", "2", "100", "--exhaustive", "--out", str(out)]) == 0
        capsys.readouterr()
        lines = out.read_text().splitlines()
        assert len(lines) == 25
        records = [json.loads(line) for line in lines]
        assert [r["p"] for r in records] == sorted(r["p"] for r in records)
        first = records[0]
        assert first == {
            "p": 2,
            "first": {"p": 2, "x": 1, "d": 1, "k": 0, "type": "II"},
            "type1_k_set": [],
            "type2_k_set": [0],
            "witness_counts": {"type1": 0, "type2": 1},
            "residue_24": 2,
            "residue_840": 2,
        }
        by_p = {r["p"]: r for r in records}
        assert by_p[41]["type2_k_set"] == [0, 1, 3]
        summary = json.loads((tmp_path / "scan.jsonl.summary.json").read_text())
        assert summary["counterexamples"] == []
        assert summary["prime_count"] == 25
        assert summary["mode"] == "exhaustive"

    def test_first_only_nulls(self, tmp_path, capsys):
        out = tmp_path / "scan.jsonl"
        assert main(["scan", "2", "50", "--out", str(out)]) == 0
        capsys.readouterr()
        for line in out.read_text().splitlines():
            rec = json.loads(line)
            assert rec["type1_k_set"] is None
            assert rec["witness_counts"] is None
            assert rec["first"] is not None

    def test_stdout_mode(self, capsys):
        assert main(["scan", "2", "30", "--exhaustive"]) == 0
        captured = capsys.readouterr()
        assert len(captured.out.splitlines()) == 10
        assert json.loads(captured.err.splitlines()[-1])["prime_count"] == 10

    def test_byte_identical_across_threads(self, tmp_path, capsys):
        files = []
        for workers in (1, 2, 3):
            path = tmp_path / f"scan_w{workers}.jsonl"
            assert main(
                ["scan", "2", "500", "--exhaustive", "--threads", str(workers), "--out", str(path)]
            ) == 0
            files.append(path.read_bytes())
        capsys.readouterr()
        assert files[0] == files[1] == files[2]

    def test_io_failure(self, tmp_path, capsys):
        missing_dir = tmp_path / "absent" / "scan.jsonl"
        assert main(["scan", "2", "30", "--out", str(missing_dir)]) == 4
        assert "i/o error" in capsys.readouterr().err

    def test_counterexample_exit_code(self, monkeypatch, tmp_path, capsys):
        # No real counterexample exists in reach, so fabricate one to
        # pin the exit-code path.
        monkeypatch.setattr(scan_module, "first_witness", lambda p: None)
        out = tmp_path / "scan.jsonl"
        assert main(["scan", "2", "30", "--out", str(out)]) == 3
        err = capsys.readouterr().err
        assert "counterexamples" in err
        rec = json.loads(out.read_text().splitlines()[0])
        assert rec["first"] is None

    def test_domain_error(self, capsys):
        assert main(["scan", "9", "2"]) == 2
        capsys.readouterr()


class TestTable:
    def test_csv_matches_library(self, capsys):
        assert main(["table", "1"]) == 0
        out = capsys.readouterr().out
        assert out == k_table_csv(k_table(100, SolutionType.TYPE_I))

    def test_json_matches_library(self, capsys):
        assert main(["table", "2", "--format", "json"]) == 0
        out = capsys.readouterr().out
        assert out == k_table_json(k_table(100, SolutionType.TYPE_II)) + "\n"

    def test_custom_hi_and_file_output(self, tmp_path, capsys):
        out = tmp_path / "table.csv"
        assert main(["table", "2", "--hi", "10", "--out", str(out)]) == 0
        capsys.readouterr()
        assert out.read_text() == "2,0\n3,0\n5,0\n7,0\n"

    def test_rejects_other_table_numbers(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "3"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestFigure:
    def test_default_prints_points(self, capsys):
        assert main(["figure", "--hi", "5"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("p,x\n2,1\n")

    def test_file_outputs(self, tmp_path, capsys):
        pts = tmp_path / "points.csv"
        svg = tmp_path / "figure.svg"
        assert main(
            ["figure", "--hi", "100", "--points-out", str(pts), "--svg-out", str(svg)]
        ) == 0
        capsys.readouterr()
        assert pts.read_text().startswith("p,x\n")
        assert svg.read_text().startswith("<svg")


class TestCompare:
    def test_agreement(self, capsys):
        assert main(["compare", "2", "100"]) == 0
        assert "agree exactly" in capsys.readouterr().out

    def test_json(self, capsys):
        assert main(["compare", "2", "50", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["violations"] == []
        assert data["primes"] == 15

    def test_violation_exit_code(self, monkeypatch, capsys):
        monkeypatch.setattr(
            cli, "check_correspondence", lambda p, oracle_cap: [f"p={p}: fabricated"]
        )
        assert main(["compare", "2", "10"]) == 5
        assert "VIOLATION" in capsys.readouterr().out


class TestProperties:
    def test_clean(self, capsys):
        assert main(["properties", "300"]) == 0
        out = capsys.readouterr().out
        assert "0 violation(s)" in out

    def test_split_bounds_json(self, capsys):
        assert main(["properties", "500", "--divisor-hi", "100", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {
            "k0_rule_hi": 500,
            "k0_violations": [],
            "divisor_rule_hi": 100,
            "divisor_violations": [],
        }

    def test_violation_exit_code(self, monkeypatch, capsys):
        monkeypatch.setattr(cli, "check_k0_type1_rule", lambda hi: [97])
        assert main(["properties", "100"]) == 5
        assert "VIOLATION p=97" in capsys.readouterr().out


class TestParsing:
    def test_no_command_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "erdos_straus", "check", "2", "--json"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["p"] == 2

    def test_console_script(self):
        proc = subprocess.run(
            ["erdos-straus", "solve", "2"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert "1/1 + 1/2 + 1/2" in proc.stdout

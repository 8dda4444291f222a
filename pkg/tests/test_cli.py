"""The command-line surface: outputs, round trips, and exit codes."""

import json

from cghlab.cli import main
from cghlab.constructions import FAMILIES, h_star
from cghlab.core import Cgh, load_cgh, save_cgh


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_m2_example(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "6", "--a", "0,1,3", "--b", "2,4,5")
        assert code == 0
        assert out.splitlines()[0] == "M2"

    def test_oracle_agreement(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--n", "6", "--a", "0,1,3", "--b", "2,4,5", "--oracle"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines == ["M2", "oracle=M2", "agree=true"]

    def test_bad_triple_is_input_error(self, capsys):
        code, _, err = run(capsys, "classify", "--n", "6", "--a", "0,1", "--b", "2,4,5")
        assert code == 2
        assert "error" in err


class TestConstruct:
    def test_hstar9(self, capsys, tmp_path):
        out_path = tmp_path / "h.json"
        code, out, _ = run(
            capsys, "construct", "--family", "HSTAR", "--n", "9", "--out", str(out_path)
        )
        assert code == 0
        assert "size=30" in out and "match=true" in out
        assert load_cgh(str(out_path)) == h_star(9)

    def test_hstar_even_defaults_to_zero_bits(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "HSTAR", "--n", "8")
        assert code == 0
        assert "size=20" in out and "match=true" in out

    def test_m3x_with_swaps(self, capsys):
        code, out, _ = run(
            capsys, "construct", "--family", "M3X", "--n", "9", "--swaps", "1,2"
        )
        assert code == 0
        assert "size=64" in out and "match=true" in out

    def test_d2tri_with_diagonals(self, capsys):
        code, out, _ = run(
            capsys, "construct", "--family", "D2TRI", "--n", "5", "--diagonals", "0-2,0-3"
        )
        assert code == 0
        assert "size=3" in out

    def test_d2design(self, capsys, tmp_path):
        design_path = tmp_path / "design.json"
        design_path.write_text(json.dumps({"n": 7, "blocks": [[0, 1, 2, 3, 4, 5, 6]]}))
        code, out, _ = run(
            capsys, "construct", "--family", "D2DESIGN", "--n", "7",
            "--design", str(design_path),
        )
        assert code == 0
        assert "size=8" in out and "match=true" in out

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "construct", "--family", "NOPE", "--n", "6")
        assert code == 2

    def test_roundtrip_construct_check_all_families(self, capsys, tmp_path):
        for fid in ("HSTAR", "HPRIME", "HPLUS", "M3X", "M2X", "S3H0", "S2SPLIT", "D2FAN"):
            info = FAMILIES[fid]
            for n in range(3, 13):
                if not info.valid_n(n):
                    continue
                path = tmp_path / f"{fid}_{n}.json"
                code, _, _ = run(
                    capsys, "construct", "--family", fid, "--n", str(n), "--out", str(path)
                )
                assert code == 0
                forbid = ",".join(sorted(c.value for c in info.forbidden))
                code, out, _ = run(capsys, "check", "--in", str(path), "--forbid", forbid)
                assert code == 0, (fid, n, out)


class TestCheck:
    def test_violation_exits_one_with_witness(self, capsys, tmp_path):
        path = tmp_path / "full6.json"
        save_cgh(Cgh.complete(6), str(path))
        code, out, _ = run(capsys, "check", "--in", str(path), "--forbid", "M1")
        assert code == 1
        data = json.loads(out)
        assert data["free"] is False
        assert data["violation"] == "M1"
        assert len(data["witness"]) == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "--in", "/nonexistent.json", "--forbid", "M1")
        assert code == 2

    def test_malformed_json_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, _ = run(capsys, "check", "--in", str(path), "--forbid", "M1")
        assert code == 2

    def test_duplicate_triples_rejected(self, capsys, tmp_path):
        path = tmp_path / "dup.json"
        path.write_text(json.dumps({"n": 6, "triples": [[0, 1, 2], [0, 1, 2]]}))
        code, _, _ = run(capsys, "check", "--in", str(path), "--forbid", "M1")
        assert code == 2


class TestCount:
    def test_census_json(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        save_cgh(Cgh.of(6, [(0, 1, 2), (3, 4, 5), (0, 2, 4)]), str(path))
        code, out, _ = run(capsys, "count", "--in", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["pairs"] == 3
        assert data["counts"]["M1"] == 1
        assert data["identical"] == 0


class TestSolve:
    def test_m2_at_seven(self, capsys, tmp_path):
        witness_path = tmp_path / "w.json"
        code, out, _ = run(
            capsys, "solve", "--n", "7", "--forbid", "M2", "--out", str(witness_path)
        )
        assert code == 0
        data = json.loads(out)
        assert data["ex"] == 19
        assert data["status"] == "Optimal"
        assert data["n"] == 7 and data["forbidden"] == ["M2"]
        assert data["nodes"] >= 1 and data["ms"] >= 0
        witness = load_cgh(str(witness_path))
        assert witness.size == 19

    def test_require_optimal_timeout_exits_three(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--n", "8", "--forbid", "D1",
            "--budget", "0.001", "--require-optimal",
        )
        assert code == 3
        assert json.loads(out)["status"] == "LowerBoundOnly"

    def test_bad_forbidden_name(self, capsys):
        code, _, _ = run(capsys, "solve", "--n", "6", "--forbid", "Q7")
        assert code == 2


class TestEnumerate:
    def test_unique_family(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "5", "--forbid", "M1")
        assert code == 0
        data = json.loads(out)
        assert data["ex"] == 10
        assert data["count"] == 1
        assert data["truncated"] is False
        assert len(data["families"][0]["triples"]) == 10

    def test_cap(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "6", "--forbid", "M1", "--cap", "2")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 2
        assert data["truncated"] is True


class TestTable:
    def test_m3_rows_match(self, capsys):
        code, out, _ = run(
            capsys, "table", "--forbid", "M3", "--n-from", "4", "--n-to", "7",
            "--formula", "m3",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,forbidden,ex_computed,formula,match,ms"
        assert len(lines) == 5
        for line in lines[1:]:
            fields = line.split(",")
            assert fields[1] == "M3"
            assert fields[2] == fields[3]
            assert fields[4] == "true"

    def test_without_formula(self, capsys):
        code, out, _ = run(capsys, "table", "--forbid", "S3", "--n-from", "4", "--n-to", "4")
        assert code == 0
        row = out.strip().splitlines()[1].split(",")
        assert row[2] == "4" and row[3] == "" and row[4] == ""

    def test_unknown_formula(self, capsys):
        code, _, _ = run(
            capsys, "table", "--forbid", "M3", "--n-from", "4", "--n-to", "5",
            "--formula", "nope",
        )
        assert code == 2


class TestTournament:
    def test_build_count_roundtrip(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        code, _, _ = run(capsys, "tournament", "--n", "7", "--build", "--out", str(path))
        assert code == 0
        code, out, _ = run(capsys, "tournament", "--count", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["triangles"] == 14
        assert data["by_formula"] == 14

    def test_build_prints_json_without_out(self, capsys):
        code, out, _ = run(capsys, "tournament", "--n", "5", "--build")
        assert code == 0
        data = json.loads(out)
        assert data["n"] == 5 and len(data["arcs"]) == 10

    def test_orient(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        save_cgh(h_star(7), str(path))
        code, out, _ = run(capsys, "tournament", "--orient", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["bound_holds"] is True
        assert data["directed_triangles"] == 14

    def test_orient_d1_violation_is_input_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        save_cgh(Cgh.of(4, [(0, 1, 2), (0, 2, 3)]), str(path))
        code, _, err = run(capsys, "tournament", "--orient", str(path))
        assert code == 2
        assert "D1" in err

    def test_exactly_one_mode(self, capsys):
        code, _, _ = run(capsys, "tournament", "--n", "5")
        assert code == 2

    def test_build_needs_n(self, capsys):
        code, _, _ = run(capsys, "tournament", "--build")
        assert code == 2


class TestVerifyAll:
    def test_capped_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify-all", "--max-n", "5")
        assert code == 0
        marks = [l for l in out.splitlines() if " PASS " in l or " FAIL " in l]
        assert len(marks) == 14
        assert all(" PASS " in l for l in marks)

import csv
import io
import json

import pytest

from graphenergy.cli import main
import graphenergy.verify as verify_mod
from graphenergy.verify import CheckResult


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnergy:
    def test_family_k4_text(self, capsys):
        code, out, err = run(capsys, "energy", "--family", "K4")
        assert code == 0
        assert "energy     : 6.000000" in out

    def test_family_s77(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "energy", "--family", "S 7 7")
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["energy"] == pytest.approx(6.64681, abs=1e-5)
        assert payload[0]["class_label"] == "class1"

    def test_empty_input_is_success(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(""))
        code, out, err = run(capsys, "energy", "-")
        assert code == 0
        assert out == ""

    def test_text_and_json_carry_identical_values(self, capsys):
        code, text_out, _ = run(capsys, "energy", "--family", "B 7 9")
        code2, json_out, _ = run(
            capsys, "--format", "json", "energy", "--family", "B 7 9"
        )
        assert code == code2 == 0
        payload = json.loads(json_out)[0]
        assert f"energy     : {payload['energy']:.6f}" in text_out
        assert f"n={payload['n']} e={payload['e']}" in text_out

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys, "--format", "csv", "energy", "--family", "Kb 3 3"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["bipartite"] == "1"
        assert float(rows[0]["energy"]) == pytest.approx(6.0, abs=1e-9)

    def test_mixed_stdin_graph6_and_family(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("C~\nS 4 4\n# note\n\n"))
        code, out, _ = run(capsys, "--format", "csv", "energy", "-")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["input"] for r in rows] == ["C~", "S 4 4"]

    def test_family_flags_combine_with_file(self, capsys, tmp_path):
        path = tmp_path / "in.g6"
        path.write_text("C~\n")
        code, out, _ = run(
            capsys, "--format", "csv", "energy", "--family", "C5", str(path)
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["input"] for r in rows] == ["C5", "C~"]

    def test_parse_error_carries_line_number(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("K4\n!!bogus!!\n"))
        code, _, err = run(capsys, "energy", "-")
        assert code == 2
        assert "line 2" in err

    def test_oversized_graph6_is_scale_error(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("~??\n"))
        code, _, err = run(capsys, "energy", "-")
        assert code == 2
        assert "line 1" in err

    def test_missing_file_is_io_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "energy", str(tmp_path / "absent.g6"))
        assert code == 3

    def test_family_error_is_usage(self, capsys):
        code, _, err = run(capsys, "energy", "--family", "S 5 9")
        assert code == 2
        assert "requires" in err

    def test_large_graph_skips_class_label(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json", "energy", "--family", "S 20 22"
        )
        assert code == 0
        payload = json.loads(out)[0]
        assert payload["class_label"] is None
        assert payload["energy"] > 0

    def test_class2_witness_in_report(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json", "energy", "--family", "C3 + C3"
        )
        assert code == 0
        payload = json.loads(out)[0]
        assert payload["class_label"] == "class2"
        a, b = payload["class_witness"]
        assert len(a) == len(b) == 3

    def test_quad_tol_override(self, capsys):
        code, out, _ = run(
            capsys,
            "--format", "json", "--quad-tol", "1e-5",
            "energy", "--family", "K4",
        )
        assert code == 0
        payload = json.loads(out)[0]
        assert payload["coulson_error_bound"] <= 1e-5


class TestEnumerate:
    def test_count_on_stdout(self, capsys):
        code, out, _ = run(capsys, "enumerate", "7", "10")
        assert code == 0
        assert out.strip() == "132"

    def test_small_tetracyclic(self, capsys):
        code, out, _ = run(capsys, "enumerate", "5", "8")
        assert code == 0
        assert out.strip() == "2"

    def test_envelope_error_exit_2(self, capsys):
        code, _, err = run(capsys, "enumerate", "11", "20")
        assert code == 2
        assert "supports" in err

    def test_out_writes_cache_format(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "enumerate", "6", "9", "--out", str(tmp_path / "cache")
        )
        assert code == 0
        g6 = (tmp_path / "cache" / "census_n6_e9.g6").read_text().splitlines()
        assert len(g6) == 20
        meta = (tmp_path / "cache" / "census_n6_e9.meta").read_text()
        assert "count: 20" in meta

    def test_cache_dir_reuse(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "enumerate", "6", "8"
        )
        assert code == 0 and out.strip() == "22"
        # second call must load the file it just wrote
        code, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "enumerate", "6", "8"
        )
        assert code == 0 and out.strip() == "22"

    def test_corrupt_cache_is_io_error(self, capsys, tmp_path):
        run(capsys, "--cache-dir", str(tmp_path), "enumerate", "6", "8")
        path = tmp_path / "census_n6_e8.g6"
        path.write_text(path.read_text() + "C~\n")
        code, _, err = run(capsys, "--cache-dir", str(tmp_path), "enumerate", "6", "8")
        assert code == 3
        assert "cache" in err.lower() or "digest" in err.lower()


class TestRank:
    def test_top_two_of_7_8(self, capsys):
        from graphenergy import canonical_label, family_graph

        code, out, _ = run(capsys, "--format", "json", "rank", "7", "8", "--top", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["rows"][1]["graph6"] == canonical_label(
            family_graph("S 7 8")
        ).graph6

    def test_5_6_minimal_and_second(self, capsys):
        from graphenergy import canonical_label, family_graph

        code, out, _ = run(capsys, "--format", "json", "rank", "5", "6", "--top", "2")
        payload = json.loads(out)
        assert payload["rows"][0]["graph6"] == canonical_label(
            family_graph("B 5 6")
        ).graph6
        assert payload["rows"][1]["graph6"] == canonical_label(
            family_graph("S 5 6")
        ).graph6

    def test_top_zero_empty_table(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "rank", "5", "6", "--top", "0")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["rank", "graph6", "energy", "charpoly_digest"]]

    def test_envelope(self, capsys):
        code, _, err = run(capsys, "rank", "12", "15")
        assert code == 2


class TestVerify:
    def test_single_check_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--check", "closed-forms")
        assert code == 0
        assert "closed-forms: PASS" in out

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json", "verify", "--check", "closed-forms"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["name"] == "closed-forms"
        assert payload[0]["passed"] is True

    def test_unknown_check_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--check", "no-such"])
        assert exc.value.code == 2

    def test_failing_check_exits_1(self, capsys, monkeypatch):
        def always_fails(**kwargs):
            return CheckResult("doomed", False, [{"item": "x", "ok": False}], 0.0)

        monkeypatch.setitem(verify_mod.CHECKS, "doomed", always_fails)
        code, out, _ = run(capsys, "verify", "--check", "doomed")
        assert code == 1
        assert "doomed: FAIL" in out

    def test_csv_summary(self, capsys):
        code, out, _ = run(
            capsys, "--format", "csv", "verify", "--check", "closed-forms"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["check"] == "closed-forms"
        assert rows[0]["passed"] == "1"

    def test_trials_and_seed_forwarded(self, capsys):
        code, out, _ = run(
            capsys,
            "--format",
            "json",
            "--seed",
            "5",
            "verify",
            "--check",
            "edge-cut",
            "--trials",
            "25",
        )
        assert code == 0
        payload = json.loads(out)
        summary = payload[0]["evidence"][-1]
        assert summary["trials"] == 25
        assert summary["seed"] == 5

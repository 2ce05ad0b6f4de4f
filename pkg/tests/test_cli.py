import json
import os

import pytest

from cycpres.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestClassify:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "classify", "3", "5", "3", "2", "1")
        assert code == 0
        assert "perfect: true" in out and "type_Z': true" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "classify", "2", "5", "3", "1", "1", "--json")
        assert code == 0
        rec = json.loads(out)
        assert rec["det"] == "11" and rec["perfect"] is False
        assert rec["invariant_factors"] == ["1", "1", "1", "1", "11"]
        assert rec["classifier"] == "not-perfect"

    def test_witness_flag(self, capsys):
        code, out, _ = run(capsys, "classify", "3", "5", "3", "2", "1", "--json", "--witness")
        rec = json.loads(out)
        assert rec["witness_j"] == 4 and rec["witness_eps"] == 1

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run(capsys, "classify", "2", "1", "3", "1", "1")
        assert code == 2 and "n must be at least 2" in err


class TestAbelianize:
    def test_fibonacci(self, capsys):
        code, out, _ = run(capsys, "abelianize", "--word", "x0 x1 X2", "--n", "5", "--json")
        rec = json.loads(out)
        assert code == 0 and rec["det"] == "11"

    def test_infinite(self, capsys):
        code, out, _ = run(capsys, "abelianize", "--word", "x0 X0", "--n", "3", "--json")
        rec = json.loads(out)
        assert rec["det"] == "0" and rec["finite_abelianization"] is False

    def test_single_generator(self, capsys):
        code, out, _ = run(capsys, "abelianize", "--word", "x0", "--n", "4", "--json")
        rec = json.loads(out)
        assert rec["perfect"] is True

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "abelianize", "--word", "x9", "--n", "4")
        assert code == 2 and "position 0" in err


class TestReduce:
    def test_named_reduction(self, capsys):
        code, out, _ = run(capsys, "reduce", "3", "5", "5", "2", "2")
        assert code == 0
        payload = json.loads(out)
        assert (payload["d"], payload["N"], payload["Q"], payload["Qhat"], payload["K"]) == \
            (1, 5, 2, 3, 3)
        assert payload["reduced"] == {"r": 3, "n": 5, "k": 3, "s": 2, "q": 1}

    def test_free_product(self, capsys):
        code, out, _ = run(capsys, "reduce", "2", "10", "3", "1", "2")
        payload = json.loads(out)
        assert payload["copies"] == 2
        assert payload["reduced"] == {"r": 2, "n": 5, "k": 2, "s": 1, "q": 1}

    def test_inapplicable_exit_3(self, capsys):
        code, _, err = run(capsys, "reduce", "3", "5", "4", "1", "1")
        assert code == 3 and "s = r-1" in err


class TestScan:
    def test_csv_header_and_footer(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "classify", "--n", "5",
                           "--r-max", "2", "--k-max", "2", "--q-max", "1", "--s-max", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[-1] == "# summary tuples=4 violations=0"

    def test_deterministic_across_jobs(self, capsys):
        _, out1, _ = run(capsys, "scan", "--mode", "verify-corollary-b", "--n", "5",
                         "--q-max", "2")
        _, out2, _ = run(capsys, "scan", "--mode", "verify-corollary-b", "--n", "5",
                         "--q-max", "2", "--jobs", "2")
        assert out1 == out2

    def test_open_cases_content(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "open-cases", "--n", "5")
        assert code == 0
        rows = out.strip().split("\n")
        assert rows[1].startswith("3,5,3,2,1,1,true")

    def test_theorem_a_footer_reports_honestly(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "verify-theorem-a", "--n", "5")
        assert code == 0
        assert out.strip().split("\n")[-1].startswith("# summary tuples=625 violations=")

    def test_theorem_a_mirror_clean(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "verify-theorem-a", "--n", "5",
                           "--include-mirror")
        assert out.strip().split("\n")[-1] == "# summary tuples=625 violations=0"

    def test_gcd6_mode_guard(self, capsys):
        code, _, err = run(capsys, "scan", "--mode", "verify-theorem-a", "--n", "6",
                           "--gcd6-filter", "all")
        assert code == 2 and "gcd(n,6)" in err

    def test_gcd6_filter_applied_by_default(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "verify-theorem-a", "--n", "5,6")
        assert code == 0
        assert all(line.split(",")[1] == "5" for line in out.strip().split("\n")[1:-1])

    def test_n_cap_without_force(self, capsys):
        code, _, err = run(capsys, "scan", "--mode", "classify", "--n", "61")
        assert code == 2 and "--force" in err

    def test_jsonl_format(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "verify-lemma", "--n", "5",
                           "--format", "jsonl")
        lines = out.strip().split("\n")
        first = json.loads(lines[0])
        assert first["s"] is None and first["witness_j"] is not None
        summary = json.loads(lines[-1])
        assert summary["summary"]["violations"] == 0

    def test_resultant_symmetry_mode(self, capsys):
        code, out, _ = run(capsys, "scan", "--mode", "verify-resultant-symmetry", "--n", "6")
        assert code == 0
        assert out.strip().split("\n")[-1].endswith("violations=0")

    def test_output_file_and_unwritable_path(self, capsys, tmp_path):
        target = tmp_path / "out.csv"
        code, _, _ = run(capsys, "scan", "--mode", "open-cases", "--n", "5",
                         "--output", str(target))
        assert code == 0 and target.read_text().startswith(CSV_HEADER)
        code, _, err = run(capsys, "scan", "--mode", "open-cases", "--n", "5",
                           "--output", str(tmp_path / "missing_dir" / "x.csv"))
        assert code == 4 and "cannot write output" in err

    def test_figures_rendered(self, capsys, tmp_path):
        figdir = tmp_path / "figs"
        code, _, _ = run(capsys, "scan", "--mode", "classify", "--n", "5",
                         "--r-max", "3", "--k-max", "3", "--figures", str(figdir))
        assert code == 0
        assert (figdir / "classify_n5.png").exists()


class TestScanCache:
    def test_cache_roundtrip_and_append(self, capsys, tmp_path):
        cache = tmp_path / "cache.jsonl"
        args = ("scan", "--mode", "classify", "--n", "5", "--r-max", "2",
                "--k-max", "2", "--cache", str(cache))
        _, out1, _ = run(capsys, *args)
        n_lines = len(cache.read_text().strip().split("\n"))
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        # Second run was fully served from the cache: no new lines appended.
        assert len(cache.read_text().strip().split("\n")) == n_lines

    def test_corrupt_cache_line_skipped(self, capsys, tmp_path):
        cache = tmp_path / "cache.jsonl"
        cache.write_text('not json at all\n{"key": "missing-record"}\n')
        code, out, err = run(capsys, "scan", "--mode", "open-cases", "--n", "5",
                             "--cache", str(cache))
        assert code == 0
        assert err.count("skipping corrupt cache line") == 2
        assert "3,5,3,2,1" in out

    def test_env_var_cache_path(self, capsys, tmp_path, monkeypatch):
        cache = tmp_path / "env_cache.jsonl"
        monkeypatch.setenv("CYCPRES_CACHE", str(cache))
        code, _, _ = run(capsys, "scan", "--mode", "open-cases", "--n", "5")
        assert code == 0 and cache.exists()


class TestVerify:
    def test_unknown_suite_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "no-such-suite")
        assert code == 2 and "unknown suite" in err

    def test_lemma_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "lemma", "--n", "5,7")
        assert code == 0 and "violations: 0" in out

    def test_newton_girard_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "newton-girard", "--n", "5")
        assert code == 0 and "violations: 0" in out

    def test_corollary_b_clean_via_n_max(self, capsys):
        code, out, _ = run(capsys, "verify", "corollary-b", "--n-max", "7")
        assert code == 0 and "violations: 0" in out

    def test_theorem_a_reports_violations(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem-a", "--n", "5")
        assert code == 1 and "violations: 8" in out

    def test_theorem_a_mirror_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem-a", "--n", "5", "--include-mirror")
        assert code == 0

    def test_flip_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "flip", "--n", "5,6")
        assert code == 0

    def test_dual_paths_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "dual-paths", "--n", "2,3,4,5", "--per-n", "20")
        assert code == 0

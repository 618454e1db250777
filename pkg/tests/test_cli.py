"""CLI: thin-adapter golden checks, exit codes, output determinism."""

import json
import os
import pathlib
import subprocess
import sys

import pytest

from hilbfam.balancing import BalancingInstance, check_lower_bound, min_balancing_size
from hilbfam.cli import main
from hilbfam.hilbert import hilbert_series, modq_report
from hilbfam.setfam import SetFamily, Subset, format_family, make_uniform_family
from hilbfam.theorems import verify_hrubes

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestHilbertCommand:
    def test_modq_report_matches_library(self, capsys):
        code, out, _ = run_cli(
            capsys, "hilbert", "--n", "6", "--d", "3", "--p", "3", "--m", "2",
            "--modq", "3",
        )
        assert code == 0
        body = json.loads(out)
        assert body == modq_report(6, 3, 3, 3, 2).as_dict()
        assert body["h_oracle"] == 15
        assert body["match"] is True

    def test_uniform_outside_wilson_range_has_null_closed_form(self, capsys):
        code, out, _ = run_cli(
            capsys, "hilbert", "--n", "4", "--d", "2", "--p", "2", "--m", "3"
        )
        assert code == 0
        body = json.loads(out)
        assert body["h_closed_form"] is None
        assert body["match"] is None

    def test_bad_modulus_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys, "hilbert", "--n", "6", "--d", "3", "--p", "3", "--m", "2",
            "--modq", "2",
        )
        assert code == 2
        assert "error" in err


class TestSeriesCommand:
    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "series", "--n", "4", "--d", "2", "--p", "2", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["m,h", "0,1", "1,4", "2,6"]

    def test_json_matches_library(self, capsys):
        code, out, _ = run_cli(capsys, "series", "--n", "5", "--d", "2", "--p", "3")
        assert code == 0
        points = make_uniform_family(5, 2).points()
        assert json.loads(out)["series"] == list(hilbert_series(points, 3, 1))


class TestIdealCommand:
    def test_basis_rendering(self, capsys):
        code, out, _ = run_cli(
            capsys, "ideal", "--n", "4", "--d", "2", "--p", "2", "--m", "1"
        )
        assert code == 0
        body = json.loads(out)
        assert body["basis"] == ["x4 + x3 + x2 + x1"]
        assert body["h"] == 4
        assert body["ideal_dim"] == 1


class TestVerifyCommands:
    def test_hrubes_pass_matches_library(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "hrubes", "--p", "3")
        assert code == 0
        assert json.loads(out) == verify_hrubes(3).as_dict()

    def test_hrubes_nonprime_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "hrubes", "--p", "4")
        assert code == 2
        assert "prime" in err

    def test_main2_out_of_range_exits_one(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "main2", "--n", "4", "--d", "1", "--q", "4", "--p", "2"
        )
        assert code == 1
        assert json.loads(out)["status"] == "NOT_APPLICABLE"

    def test_main_chain_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "main", "--n", "6", "--d", "3", "--q", "3", "--p", "3"
        )
        assert code == 0
        body = json.loads(out)
        assert body["claim"] == "MAIN"
        assert body["metrics"]["h_f"] == body["metrics"]["h_g"] == 15

    def test_grid_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "grid", "--p", "3", "--sets", "0,1;0,1,2", "--w", "1,2"
        )
        assert code == 0
        body = json.loads(out)
        assert body["status"] == "PASS"
        assert body["metrics"]["h_f"] == 5

    def test_timing_flag_adds_field(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "hrubes", "--p", "2", "--timing")
        assert code == 0
        assert "wall_time_ms" in json.loads(out)

    def test_hlemma_cap_exceeded_exits_three(self, capsys, monkeypatch):
        monkeypatch.setenv("HILBFAM_ENUM_CAP", "50")
        code, _, err = run_cli(capsys, "verify", "hlemma", "--p", "3")
        assert code == 3
        assert "cap" in err


class TestBalanceCommands:
    def test_check_pass(self, capsys, tmp_path):
        fam = SetFamily(4, (Subset((1, 2)), Subset((1, 3))))
        path = tmp_path / "fam.txt"
        path.write_text(format_family(fam))
        code, out, _ = run_cli(
            capsys, "balance", "check", "--n", "4", "--L", "1", "--family", str(path)
        )
        assert code == 0
        assert json.loads(out) == check_lower_bound(
            BalancingInstance(fam, (1,)), 2
        ).as_dict()

    def test_check_not_balancing_exits_one(self, capsys, tmp_path):
        path = tmp_path / "fam.txt"
        path.write_text("n=4\n1,2\n")
        code, out, _ = run_cli(
            capsys, "balance", "check", "--L", "1", "--family", str(path)
        )
        assert code == 1
        assert json.loads(out)["status"] == "NOT_APPLICABLE"

    def test_n_mismatch_usage_error(self, capsys, tmp_path):
        path = tmp_path / "fam.txt"
        path.write_text("n=4\n1,2\n")
        code, _, err = run_cli(
            capsys, "balance", "check", "--n", "6", "--L", "1", "--family", str(path)
        )
        assert code == 2


class TestSearchCommand:
    def test_found(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--n", "4", "--L", "1", "--limit", "3")
        assert code == 0
        assert json.loads(out) == min_balancing_size(4, (1,), 3).as_dict()

    def test_not_found_exits_one(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--n", "4", "--L", "1", "--limit", "1")
        assert code == 1
        assert json.loads(out)["limit_hit"] is True


class TestUsage:
    def test_missing_subcommand(self, capsys):
        assert run_cli(capsys)[0] == 2

    def test_unknown_flag(self, capsys):
        assert run_cli(capsys, "hilbert", "--bogus", "1")[0] == 2

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "hrubes", "--p", "2", "--format", "text"
        )
        assert code == 0
        assert "status: PASS" in out


class TestDeterminism:
    def test_verify_batch_byte_identical(self):
        env = dict(os.environ, PYTHONPATH=str(SRC) + os.pathsep + os.environ.get("PYTHONPATH", ""))
        cmd = [sys.executable, "-m", "hilbfam", "verify", "all", "--p-max", "2",
               "--n-max", "5"]
        first = subprocess.run(cmd, capture_output=True, env=env)
        second = subprocess.run(cmd, capture_output=True, env=env)
        assert first.returncode == 0
        assert first.stdout == second.stdout
        body = json.loads(first.stdout)
        assert body["summary"]["fail"] == 0
        assert body["summary"]["not_applicable"] == 0

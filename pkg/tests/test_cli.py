import subprocess
import sys

import pytest

from biquandles.cli import main, run


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPresent:
    def test_upward(self, capsys):
        code, out, err = invoke(capsys, "present", "--braid", "n=2; v1 s1")
        assert code == 0 and err == ""
        assert out == "gens a b\nrel ur(a,b) = a\nrel lr(b,a) = b\n"

    def test_downward(self, capsys):
        code, out, err = invoke(capsys, "present", "--braid", "n=2; -s1 v1", "--down")
        assert code == 0
        assert out == "gens a b\nrel lr(b,a) = b\nrel ur(a,b) = a\n"


class TestGap:
    def test_braid_source(self, capsys):
        code, out, err = invoke(capsys, "gap", "--braid", "n=2; v1 s1")
        assert (code, out, err) == (0, "1 - s - t + s*t\n", "")

    def test_presentation_source(self, capsys, tmp_path):
        path = tmp_path / "hopf.bq"
        path.write_text("gens a b\nrel ur(a,b) = a\nrel lr(b,a) = b\n")
        code, out, err = invoke(capsys, "gap", "--presentation", str(path))
        assert (code, out) == (0, "1 - s - t + s*t\n")

    def test_parse_error_exits_one(self, capsys):
        code, out, err = invoke(capsys, "gap", "--braid", "n=2; s9")
        assert code == 1 and out == ""
        assert err.startswith("error: ")

    def test_missing_file_exits_one(self, capsys):
        code, out, err = invoke(capsys, "gap", "--presentation", "/no/such/file.bq")
        assert code == 1 and err.startswith("error: ")

    def test_non_square_presentation_exits_two(self, capsys, tmp_path):
        path = tmp_path / "bad.bq"
        path.write_text("gens a b\nrel ur(a,b) = a\n")
        code, out, err = invoke(capsys, "gap", "--presentation", str(path))
        assert code == 2 and err.startswith("error: ")

    def test_requires_exactly_one_source(self, capsys):
        code, out, err = invoke(capsys, "gap")
        assert code == 1 and err.startswith("error: ")


class TestAxioms:
    def test_linear_tables_pass(self, capsys):
        code, out, err = invoke(capsys, "axioms", "--alexander", "5,2,3")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 9
        assert all(line.endswith(": pass") for line in lines)

    def test_quaternionic_reports_failures_but_exits_zero(self, capsys):
        code, out, err = invoke(capsys, "axioms", "--quaternionic", "3")
        assert code == 0
        assert "axiom3: fail [counterexample" in out

    def test_table_file(self, capsys, tmp_path):
        path = tmp_path / "tiny.tables"
        path.write_text("size 1\nur\n0\nlr\n0\nul\n0\nll\n0\n")
        code, out, err = invoke(capsys, "axioms", "--tables", str(path))
        assert code == 0 and out.count(": pass") == 9

    def test_malformed_params_exit_one(self, capsys):
        code, out, err = invoke(capsys, "axioms", "--alexander", "5,2")
        assert code == 1 and err.startswith("error: ")

    def test_non_unit_parameter_exits_two(self, capsys):
        code, out, err = invoke(capsys, "axioms", "--alexander", "4,2,1")
        assert code == 2 and err.startswith("error: ")

    def test_non_prime_exits_two(self, capsys):
        code, out, err = invoke(capsys, "axioms", "--quaternionic", "6")
        assert code == 2 and err.startswith("error: ")


class TestQcheck:
    def test_kishino_golden(self, capsys):
        code, out, err = invoke(capsys, "qcheck", "--kishino")
        assert (code, out, err) == (0, "nontrivial (rank 8 of 12, dim 4)\n", "")

    def test_presentation_with_prime(self, capsys, tmp_path):
        path = tmp_path / "one.bq"
        path.write_text("gens a\nrel ur(a,a) = a\n")
        code, out, err = invoke(capsys, "qcheck", "--presentation", str(path), "--prime", "5")
        assert (code, out) == (0, "trivial (rank 4 of 4, dim 0)\n")

    def test_non_prime_exits_two(self, capsys):
        code, out, err = invoke(capsys, "qcheck", "--kishino", "--prime", "4")
        assert code == 2 and err.startswith("error: ")


class TestInvariance:
    def test_reports_pass(self, capsys):
        code, out, err = invoke(
            capsys, "invariance", "--braid", "n=2; v1 s1", "--trials", "6", "--seed", "0"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "base gap: 1 - s - t + s*t"
        assert lines[-1] == "PASS"
        assert sum(1 for line in lines if line.startswith("trial ")) == 6

    def test_deterministic_for_seed(self, capsys):
        args = ("invariance", "--braid", "n=3; s1 v2", "--trials", "5", "--seed", "9")
        _, first, _ = invoke(capsys, *args)
        _, second, _ = invoke(capsys, *args)
        assert first == second

    def test_requires_trials_and_seed(self, capsys):
        code, out, err = invoke(capsys, "invariance", "--braid", "n=2; s1")
        assert code == 1 and err.startswith("error: ")

    def test_negative_trials_rejected(self, capsys):
        code, out, err = invoke(
            capsys, "invariance", "--braid", "n=2; s1", "--trials", "-1", "--seed", "0"
        )
        assert code == 1


class TestConvert:
    def test_invert(self, capsys):
        code, out, err = invoke(capsys, "convert", "--braid", "n=2; v1 s1", "--op", "invert")
        assert (code, out) == (0, "n=2; -s1 v1\n")

    def test_mirror_matches_invert(self, capsys):
        _, inverted, _ = invoke(capsys, "convert", "--braid", "n=3; s1 v2", "--op", "invert")
        _, mirrored, _ = invoke(capsys, "convert", "--braid", "n=3; s1 v2", "--op", "mirror")
        assert inverted == mirrored

    def test_ad(self, capsys):
        code, out, err = invoke(capsys, "convert", "--braid", "n=2; s1", "--op", "ad")
        assert (code, out) == (0, "n=2; v1 -s1 v1\n")

    def test_reduce(self, capsys):
        code, out, err = invoke(capsys, "convert", "--braid", "n=2; s1 -s1 v1", "--op", "reduce")
        assert (code, out) == (0, "n=2; v1\n")

    def test_unknown_op_exits_one(self, capsys):
        code, out, err = invoke(capsys, "convert", "--braid", "n=2; s1", "--op", "twist")
        assert code == 1 and err.startswith("error: ")


class TestTopLevel:
    def test_unknown_subcommand_exits_one(self, capsys):
        code, out, err = invoke(capsys, "nonsense")
        assert code == 1 and err.startswith("error: ")

    def test_no_arguments_exits_one(self, capsys):
        code, out, err = invoke(capsys)
        assert code == 1 and err.startswith("error: ")

    def test_run_alias(self, capsys):
        assert run(["gap", "--braid", "n=2; v1 s1"]) == 0
        assert capsys.readouterr().out == "1 - s - t + s*t\n"

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "biquandles", "gap", "--braid", "n=2; v1 s1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "1 - s - t + s*t\n"

    def test_module_entry_point_error_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "biquandles", "gap", "--braid", "n=2; s9"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
        assert proc.stdout == ""
        assert proc.stderr.startswith("error: ")

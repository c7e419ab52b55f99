"""Exit codes and report text for every subcommand, over the fixture corpus.

The contract under test: exit 0 when all checks pass, 1 on a failed
verification or precondition, 2 on unreadable or unparseable input, and
byte-identical reports for identical invocations.
"""

import pathlib
import subprocess
import sys

import pytest

from radform.cli import CliConfig, DEFAULT_MAX_DEGREE, DEFAULT_SEED, main
from radform.formula import parse

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_degree2_passes(self, capsys):
        code, out, _ = run(capsys, "verify", FIXTURES / "degree2.poly")
        assert code == 0
        assert "PASS  witness_1^2 = p_0(sigma, witnesses)" in out
        assert "FAIL" not in out

    def test_broken_fixture_names_first_failure(self, capsys):
        code, out, _ = run(capsys, "verify", FIXTURES / "degree2_broken.poly")
        assert code == 1
        assert "FAIL  witness_1^2 = p_0(sigma, witnesses)" in out
        assert "leading term" in out

    def test_malformed_file_reports_position(self, capsys):
        code, _, err = run(capsys, "verify", FIXTURES / "bad_syntax.poly")
        assert code == 2
        assert "line 3" in err and "column" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", FIXTURES / "absent.poly")
        assert code == 2
        assert "absent.poly" in err

    def test_tower_documents_verify_via_derived_witnesses(self, capsys):
        for name in ("degree2.tower", "degree3.tower"):
            code, out, _ = run(capsys, "verify", FIXTURES / name)
            assert code == 0, name
            assert "x_1 = target(sigma, witnesses)" in out

    def test_deterministic_output(self, capsys):
        first = run(capsys, "verify", FIXTURES / "degree3.poly")
        second = run(capsys, "verify", FIXTURES / "degree3.poly")
        assert first == second


class TestObstruct:
    def test_low_degree_refused(self, capsys):
        code, _, err = run(capsys, "obstruct", FIXTURES / "degree3.poly")
        assert code == 1
        assert "at least 5" in err

    def test_candidate_is_refuted(self, capsys):
        code, out, _ = run(capsys, "obstruct", FIXTURES / "degree5_candidate.poly")
        assert code == 0
        assert "refuted" in out

    def test_tower_input_rejected(self, capsys):
        code, _, err = run(capsys, "obstruct", FIXTURES / "degree2.tower")
        assert code == 2
        assert "polyformula" in err


class TestCharacter:
    def test_resolvent_table(self, capsys):
        code, out, _ = run(
            capsys,
            "character", "x1 + w(3)*x2 + w(3)^2*x3", "3", "(1 2 3)", "(1 3 2)",
        )
        assert code == 0
        assert out.splitlines() == [
            "chi((1 2 3)) = w(3)",
            "chi((1 3 2)) = w(3)^2",
        ]

    def test_symmetric_polynomial_is_trivial(self, capsys):
        code, out, _ = run(capsys, "character", "x1*x2*x3", "5", "(1 2 3)")
        assert code == 0
        assert out.strip() == "chi((1 2 3)) = 1"

    def test_odd_permutation_refused(self, capsys):
        code, _, err = run(capsys, "character", "x1*x2", "2", "(1 2)")
        assert code == 1
        assert "odd" in err

    def test_bad_cycle_string(self, capsys):
        code, _, err = run(capsys, "character", "x1*x2", "2", "1 2)")
        assert code == 2
        assert "cycle" in err


class TestSymmetrize:
    def test_power_sum(self, capsys):
        code, out, _ = run(capsys, "symmetrize", "x1^2 + x2^2")
        assert code == 0
        assert out.strip() == "s1^2 - 2*s2"

    def test_not_symmetric(self, capsys):
        code, _, err = run(capsys, "symmetrize", "x1^2 + x2")
        assert code == 1
        assert "not symmetric" in err

    def test_no_variables(self, capsys):
        code, _, err = run(capsys, "symmetrize", "3 + 4")
        assert code == 2
        assert "no x-variables" in err

    def test_degree_cap(self, capsys):
        code, _, err = run(
            capsys, "symmetrize", "x1^4*x2^4 + x1^4*x2^4", "--max-degree", "3"
        )
        assert code == 1
        assert "cap" in err


class TestBuiltin:
    def test_degree2_matches_fixture(self, capsys):
        code, out, _ = run(capsys, "builtin", "degree2")
        assert code == 0
        assert out == (FIXTURES / "degree2.poly").read_text()

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "builtin", "degree9")
        assert code == 2
        assert "degree9" in err


class TestAbelize:
    def test_degree2_tower(self, capsys, tmp_path):
        out_path = tmp_path / "out.poly"
        code, _, _ = run(
            capsys, "abelize", FIXTURES / "degree2.tower", "--output", out_path
        )
        assert code == 0
        text = out_path.read_text()
        assert "witness 1 = 1/2*x1 - 1/2*x2" in text
        assert "# level 1: extracted root times w(2)^0" in text
        code, out, _ = run(capsys, "verify", out_path)
        assert code == 0
        assert "FAIL" not in out

    def test_degree3_tower(self, capsys, tmp_path):
        out_path = tmp_path / "out.poly"
        code, _, _ = run(
            capsys, "abelize", FIXTURES / "degree3.tower", "--output", out_path
        )
        assert code == 0
        document = parse(out_path.read_text())
        assert (document.n, document.s) == (3, 3)
        code, _, _ = run(capsys, "verify", out_path)
        assert code == 0

    def test_poly_input_rejected(self, capsys):
        code, _, err = run(capsys, "abelize", FIXTURES / "degree2.poly")
        assert code == 2
        assert "towerformula" in err


class TestConfig:
    def test_defaults(self):
        config = CliConfig(command="verify")
        assert config.seed == DEFAULT_SEED == 0
        assert config.max_degree == DEFAULT_MAX_DEGREE
        assert config.output is None

    def test_console_script_round_trip(self):
        result = subprocess.run(
            [sys.executable, "-m", "radform.cli", "verify",
             str(FIXTURES / "degree2.poly")],
            capture_output=True, text=True,
        )
        assert result.returncode == 0
        assert "PASS" in result.stdout

"""Test file for the lie-endo-cli command line"""

import json

import pytest  # pylint: disable=import-error

from cli import main
from lie_endo_toolbox import EXIT_IO_ERROR, EXIT_OK, EXIT_USAGE_ERROR, \
                             EXIT_VERIFICATION_FAILED

EULER_POTENTIAL = "d1: x1; d2: 2*x2; d3: 3*x3"


def run(capsys, *argv):
    """Run the command line and return (exit code, stdout)"""
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestList:
    """Tests for the list subcommand"""

    @staticmethod
    def test_list(capsys):
        """Fixed algebras show their dimension"""
        code, out = run(capsys, "list")
        assert code == EXIT_OK
        assert "so3 (dim 3)" in out
        assert "solvable2 (dim 2)" in out
        assert "strict_upper_triangular n≤6" in out


class TestVerify:
    """Tests for the verify subcommand"""

    @staticmethod
    def test_so3_passes(capsys):
        """Every default group passes on so3"""
        code, out = run(capsys, "verify", "so3")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report['passed']
        identities = {check['identity'] for check in report['checks']}
        assert {'jacobi', 'nijenhuis_identity', 'adjoint_invariance', 'lax_homomorphism',
                'deformed_jacobi', 'casimir_conservation', 'poisson_jacobi'} <= identities

    @staticmethod
    def test_broken_algebra(capsys):
        """A Jacobi defect is reported with its basis triple"""
        code, out = run(capsys, "verify", "--file", "spec/fixtures/broken.json")
        assert code == EXIT_VERIFICATION_FAILED
        report = json.loads(out)
        assert not report['passed']
        assert report['checks'][0]['witness'] == ["(1,2,3) e1: -1"]

    @staticmethod
    def test_so5_integrability(capsys):
        """The integrability check fails on so5"""
        code, out = run(capsys, "verify", "so5", "--which", "integrability")
        assert code == EXIT_VERIFICATION_FAILED
        check = json.loads(out)['checks'][-1]
        assert check['identity'] == 'integrability'
        assert check['status'] == 'fail'

    @staticmethod
    def test_single_identity(capsys):
        """--which accepts a structural identity name"""
        code, out = run(capsys, "verify", "heisenberg3", "--which", "killing_skew")
        assert code == EXIT_OK
        assert [check['identity'] for check in json.loads(out)['checks']] == \
            ['jacobi', 'killing_skew']

    @staticmethod
    def test_deterministic(capsys):
        """The same seed gives the same report"""
        first = run(capsys, "verify", "sl2", "--seed", "3", "--which", "conservation")
        second = run(capsys, "verify", "sl2", "--seed", "3", "--which", "conservation")
        assert first == second

    @staticmethod
    def test_usage_errors(capsys):
        """Unknown groups, algebras and missing files"""
        assert run(capsys, "verify", "so3", "--which", "nothing")[0] == EXIT_USAGE_ERROR
        assert run(capsys, "verify", "so7")[0] == EXIT_USAGE_ERROR
        assert run(capsys, "verify", "foo")[0] == EXIT_USAGE_ERROR
        assert run(capsys, "verify")[0] == EXIT_USAGE_ERROR
        assert run(capsys, "verify", "--file", "spec/fixtures/missing.json")[0] == \
            EXIT_IO_ERROR

    @staticmethod
    def test_out_file(capsys, tmp_path):
        """--out writes the report to a file"""
        out_file = tmp_path / "report.json"
        code, out = run(capsys, "verify", "so3", "--which", "nijenhuis", "--out", str(out_file))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(out_file.read_text(encoding="utf-8"))['passed']


class TestCasimir:
    """Tests for the casimir subcommand"""

    @staticmethod
    def test_so3(capsys):
        """I1 = 0 and I2 = -2 |x|^2"""
        assert run(capsys, "casimir", "so3", "--max-k", "2") == \
            (EXIT_OK, "I1 = 0\nI2 = -2*x1^2 - 2*x2^2 - 2*x3^2\n")

    @staticmethod
    def test_abelian_and_solvable(capsys):
        """All zero on abelian4, I1 = x1 on solvable2"""
        assert run(capsys, "casimir", "abelian4") == \
            (EXIT_OK, "I1 = 0\nI2 = 0\nI3 = 0\nI4 = 0\n")
        assert run(capsys, "casimir", "--algebra", "solvable2", "--max-k", "1") == \
            (EXIT_OK, "I1 = x1\n")

    @staticmethod
    def test_invalid_power(capsys):
        """--max-k must be positive"""
        assert run(capsys, "casimir", "so3", "--max-k", "0")[0] == EXIT_USAGE_ERROR


class TestBracket:
    """Tests for the bracket subcommand"""

    @staticmethod
    def test_so3_constants(capsys):
        """{d1, d2} = d3 on so3"""
        code, out = run(capsys, "bracket", "so3", "-b", "d1: 1", "-c", "d2: 1")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "{B,C} = d3: 1"

    @staticmethod
    def test_identical_potentials(capsys):
        """{B, B} = 0"""
        code, out = run(capsys, "bracket", "so3", "-b", "d1: x2*x3", "-c", "d1: x2*x3")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "{B,C} = 0"

    @staticmethod
    def test_sl2_golden(capsys):
        """Output of the sl2 example"""
        with open("spec/fixtures/sl2_bracket_golden.txt", encoding="utf-8") as stream:
            golden = stream.read()
        assert run(capsys, "bracket", "sl2", "-b", "d1: x2", "-c", "d3: 1") == (EXIT_OK, golden)

    @staticmethod
    def test_parameters(capsys):
        """--param binds rational constants"""
        code, out = run(capsys, "bracket", "so3", "--param", "a=1/2",
                        "-b", "d1: a", "-c", "d2: 2")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "{B,C} = d3: 1"

    @staticmethod
    def test_syntax_error(capsys):
        """Parse errors are usage errors"""
        assert run(capsys, "bracket", "so3", "-b", "d1: x4", "-c", "d2: 1")[0] == \
            EXIT_USAGE_ERROR
        assert run(capsys, "bracket", "so3", "--param", "a=0.5",
                   "-b", "d1: a", "-c", "d2: 1")[0] == EXIT_USAGE_ERROR


class TestFlow:
    """Tests for the flow subcommand"""

    @staticmethod
    def test_csv(capsys):
        """One row every 100 steps over [0, 1]"""
        code, out = run(capsys, "flow", "so3", "--potential", EULER_POTENTIAL,
                        "--x0", "1,1,1", "--t1", "1", "--sample-every", "100")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 12
        assert lines[0] == "t,x1,x2,x3,I1,I2,I3,specdev"
        assert lines[1] == "0,1,1,1,0,-6,0,0"

    @staticmethod
    def test_parameters(capsys):
        """Potentials may use bound parameters"""
        with_params = run(capsys, "flow", "so3", "--potential", "d1: a*x1; d2: b*x2; d3: c*x3",
                          "--param", "a=1,b=2,c=3", "--x0", "1,1,1", "--t1", "0.1")
        plain = run(capsys, "flow", "so3", "--potential", EULER_POTENTIAL,
                    "--x0", "1,1,1", "--t1", "0.1")
        assert with_params == plain

    @staticmethod
    def test_convergence(capsys):
        """--convergence prints one row per step size"""
        code, out = run(capsys, "flow", "so3", "--potential", EULER_POTENTIAL,
                        "--x0", "1,1,1", "--t1", "1", "--dt", "0.01", "--convergence", "2")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "dt,drift,ratio"
        assert len(lines) == 4
        assert lines[1].endswith(",")

    @staticmethod
    def test_xlsx_output(capsys, tmp_path):
        """An .xlsx --out writes a workbook"""
        out_file = tmp_path / "trajectory.xlsx"
        code, _ = run(capsys, "flow", "so3", "--potential", EULER_POTENTIAL,
                      "--x0", "1,1,1", "--t1", "0.1", "--out", str(out_file))
        assert code == EXIT_OK
        assert out_file.exists()

    @staticmethod
    def test_usage_errors(capsys):
        """Bad steps and initial points"""
        base = ("flow", "so3", "--potential", EULER_POTENTIAL)
        assert run(capsys, *base, "--x0", "1,1,1", "--dt=-1")[0] == EXIT_USAGE_ERROR
        assert run(capsys, *base, "--x0", "1,1")[0] == EXIT_USAGE_ERROR
        assert run(capsys, *base, "--x0", "1,1,nan")[0] == EXIT_USAGE_ERROR
        assert run(capsys, *base, "--x0", "1,1,1", "--sample-every", "0")[0] == \
            EXIT_USAGE_ERROR

    @staticmethod
    def test_blow_up(capsys):
        """A non-finite state exits with 1 after printing the finite samples"""
        code, out = run(capsys, "flow", "solvable2", "--potential", "d1: -x2",
                        "--x0", "0,1", "--t1", "2", "--dt", "0.01", "--method", "euler")
        assert code == EXIT_VERIFICATION_FAILED
        lines = out.splitlines()
        assert lines[0] == "t,x1,x2,I1,I2,specdev"
        assert lines[1] == "0,0,1,0,0,0"
        assert len(lines) > 50

    @staticmethod
    def test_tolerance_ignores_the_norm(capsys, caplog):
        """|x|^2 grows on sl2 while the Casimirs stay put, so no warning is logged"""
        code, _ = run(capsys, "flow", "sl2", "--potential", "d1: 1",
                      "--x0", "1,1,1", "--t1", "1")
        assert code == EXIT_OK
        assert "exceeds the tolerance" not in caplog.text
        code, _ = run(capsys, "flow", "so3", "--potential", EULER_POTENTIAL,
                      "--x0", "1,1,1", "--t1", "1", "--dt", "0.2", "--method", "euler")
        assert code == EXIT_OK
        assert "exceeds the tolerance" in caplog.text

    @staticmethod
    def test_missing_arguments():
        """argparse rejects a missing potential"""
        with pytest.raises(SystemExit):
            main(["flow", "so3", "--x0", "1,1,1"])

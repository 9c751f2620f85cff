import pytest

from fuzzalg import cli
from fuzzalg.surfaces import BUILTIN_SURFACES, read_surface, surface_csv
from fuzzalg.suite import fixture_text


@pytest.fixture
def script(tmp_path):
    def write(name, text=None):
        p = tmp_path / name
        p.write_text(fixture_text(name) if text is None else text)
        return str(p)
    return write


def test_run_worked_example_fails(script, capsys):
    assert cli.main(["run", script("worked_example.fz")]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("FAIL usubnorm-inequality @ (0, 0)")
    assert out[1].startswith("FAIL identity-condition")


def test_run_negated_identity_is_soft(script, capsys):
    path = script("worked_example_negated.fz")
    assert cli.main(["run", path]) == 0
    assert capsys.readouterr().out.startswith("PASS usubnorm-inequality")
    assert cli.main(["run", path, "--strict-identity"]) == 1


def test_run_empty_script(script):
    assert cli.main(["run", script("empty.fz", "")]) == 0


@pytest.mark.parametrize("name,prefix", [("bad_parse.fz", ":7:26: ParseError"), ("bad_lex.fz", ":3:17: LexError"),
                                         ("domain_gap.fz", ":3:3: DomainGap")])
def test_run_malformed_exits_2(script, capsys, name, prefix):
    path = script(name)
    assert cli.main(["run", path]) == 2
    assert capsys.readouterr().err.startswith(path + prefix)


def test_run_missing_file(tmp_path, capsys):
    assert cli.main(["run", str(tmp_path / "nope.fz")]) == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as ei:
        cli.main([])
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        cli.main(["grid"])
    assert ei.value.code == 2
    assert cli.main(["run", "x.fz", "--eps", "-1"]) == 2


def test_grid_values(capsys):
    assert cli.main(["grid", "U_p", "--n", "5"]) == 0
    assert "0.25,0.25,0.125" in capsys.readouterr().out.splitlines()
    assert cli.main(["grid", "T_L", "--n", "3"]) == 0
    assert "0.5,0.5,0" in capsys.readouterr().out.splitlines()


def test_grid_n2_has_four_rows(capsys):
    assert cli.main(["grid", "T_M", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,y,value" and len(lines) == 5


def test_grid_unknown_op_and_small_n(capsys):
    assert cli.main(["grid", "T_X"]) == 2
    assert cli.main(["grid", "T_M", "--n", "1"]) == 2


@pytest.mark.parametrize("op", sorted(BUILTIN_SURFACES))
def test_grid_file_is_byte_identical_to_stdout(tmp_path, capsys, op):
    out = tmp_path / "s.csv"
    assert cli.main(["grid", op, "--n", "7", "--out", str(out)]) == 0
    assert out.read_bytes() == surface_csv(BUILTIN_SURFACES[op](), 7).encode()
    rows = read_surface(out.read_text())
    assert len(rows) == 49 and all(0 <= r[2] <= 1 for r in rows)


def test_grid_from_script(script, capsys):
    path = script("ops.fz", "let T = tnorm product;\nlet f = fn(x) x;\n")
    assert cli.main(["grid", "T", "--n", "3", "--script", path]) == 0
    assert "0.5,0.5,0.25" in capsys.readouterr().out.splitlines()
    assert cli.main(["grid", "f", "--n", "3", "--script", path]) == 2

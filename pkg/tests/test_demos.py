import pathlib
import runpy

import pytest

from fuzzalg.dsl import run_source

DEMOS = pathlib.Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("path", sorted(DEMOS.glob("*.py")), ids=lambda p: p.name)
def test_demo_runs(path, capsys):
    runpy.run_path(str(path), run_name="__main__")
    assert capsys.readouterr().out


@pytest.mark.parametrize("path", sorted((DEMOS / "scripts").glob("*.fz")), ids=lambda p: p.name)
def test_demo_script_passes(path):
    assert run_source(path.read_text()).ok()

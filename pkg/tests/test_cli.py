from __future__ import annotations

import io
import json
from importlib.resources import files

import pytest

from ogpd.cli import EXIT_BUDGET, EXIT_FALSE, EXIT_INPUT, EXIT_TRUE, run

KLEIN = str(files("ogpd") / "data" / "klein.ogq")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, code", [
    (("validate", KLEIN), EXIT_TRUE),
    (("lift", KLEIN), EXIT_FALSE),
    (("classify", KLEIN, "--functor", "p"), EXIT_TRUE),
    (("classify", KLEIN, "--functor", "p", "--expect", "fibration"), EXIT_TRUE),
    (("classify", KLEIN, "--functor", "p", "--expect", "immersion"), EXIT_FALSE),
    (("factorize", KLEIN, "--functor", "p"), EXIT_TRUE),
    (("enlarge", KLEIN, "--functor", "i"), EXIT_TRUE),
    (("enlarge", KLEIN, "--functor", "p"), EXIT_FALSE),
    (("quotient", KLEIN, "--groupoid", "G", "--all"), EXIT_TRUE),
    (("fixture", "klein_hlp"), EXIT_TRUE),
    (("fixture", "example_vi"), EXIT_TRUE),
    (("random", "5"), EXIT_TRUE),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_input_errors(tmp_path):
    assert call("validate", str(tmp_path / "missing.ogq"))[0] == EXIT_INPUT
    assert call("frobnicate")[0] == EXIT_INPUT
    assert call("fixture", "nope")[0] == EXIT_INPUT
    assert call("random", "x")[0] == EXIT_INPUT
    assert call("classify", KLEIN)[0] == EXIT_INPUT  # two functors, none chosen
    bad = tmp_path / "bad.ogq"
    bad.write_text("groupoids:\n  G:\n    objects: [a]\n    arrows: {'id:a': [a, a]}\n")
    code, _, err = call("validate", str(bad))
    assert code == EXIT_INPUT and "line 4" in err


def test_budget_exhaustion():
    assert call("lift", KLEIN, "--budget", "3")[0] == EXIT_BUDGET


def test_json_verdict_is_byte_identical():
    a = call("factorize", KLEIN, "--functor", "p", "--json")[1]
    b = call("factorize", KLEIN, "--functor", "p", "--json")[1]
    assert a == b
    block = json.loads(a)
    assert block["verdict"] is True and len(block["inputs_sha256"]) == 64


def test_fixture_written_back_out(tmp_path):
    out = tmp_path / "k.ogq"
    assert call("fixture", "klein_hlp", "--out", str(out))[0] == EXIT_TRUE
    assert call("lift", str(out))[0] == EXIT_FALSE


def test_dot_and_figure_outputs(tmp_path):
    dot, fig = tmp_path / "q.dot", tmp_path / "q.png"
    code = call("fixture", "example_vi", "--dot", str(dot), "--figure", str(fig))[0]
    assert code == EXIT_TRUE
    assert dot.read_text().startswith("digraph")
    assert fig.stat().st_size > 0


def test_quotient_of_example_file(tmp_path):
    path = tmp_path / "vi.ogq"
    assert call("fixture", "example_vi", "--out", str(path))[0] == EXIT_TRUE
    code, out, _ = call("quotient", str(path), "--all")
    assert code == EXIT_TRUE
    assert "5 objects" in out and "inductive: false" in out


def test_validate_interval_file(tmp_path):
    path = tmp_path / "i.ogq"
    path.write_text(
        "groupoids:\n  I:\n    objects: [0, 1]\n"
        "    arrows: {iota: [0, 1], iota^-1: [1, 0]}\n"
        "    inverse: [[iota, iota^-1]]\n"
        "    compose: [[iota, iota^-1, 'id:0'], [iota^-1, iota, 'id:1']]\n"
    )
    code, out, _ = call("validate", str(path))
    assert code == EXIT_TRUE and "4 arrows" in out

import ast
import io
import json
import pathlib
import subprocess
import sys

import pytest

import ramcalc.cli as cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_conductor_json():
    code, out, _ = run("conductor", "--p", "3", "--a", "0", "--b", "0", "--expr", "x/y^9", "--json")
    assert code == 0
    data = json.loads(out)
    assert (data["swan"], data["dimtot"]) == (9, 9)
    assert list(data) == ["swan", "dimtot", "classification", "char_form", "rsw", "cc"]


def test_basechange_text_and_json():
    code, out, _ = run("basechange", "--p", "3", "--da", "1", "--db", "0", "--expr", "x/y^9")
    assert code == 0 and "x^(1/3)/y^3" in out and "swan 3, dimtot 3" in out
    _, out, _ = run("basechange", "--p", "3", "--da", "1", "--expr", "x/y^9", "--json")
    data = json.loads(out)
    assert data["image_surface"] == "x^(1/3)/y^3"
    assert (data["conductor"]["swan"], data["conductor"]["dimtot"]) == (3, 3)


def test_check_right_equality():
    code, out, _ = run("check", "--theorem", "right", "--p", "3", "--da", "0", "--db", "1", "--expr", "x/y^3", "--json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "equality" and data["bound"]["dimtot"] == 9


def test_check_left_parses_upstairs():
    code, out, _ = run("check", "--theorem", "left", "--da", "1", "--expr", "x^(1/3)/y^3", "--json")
    assert code == 0 and json.loads(out)["status"] == "equality"


@pytest.mark.parametrize("theorem", ["frobenius", "theta", "sigma"])
def test_other_checks(theorem):
    code, out, _ = run("check", "--theorem", theorem, "--da", "1", "--expr", "x/y", "--json")
    assert code == 0 and json.loads(out)["theorem"] == theorem


def test_reduce_and_charform():
    code, out, _ = run("reduce", "--a", "1", "--expr", "x/y^9", "--json")
    assert code == 0 and json.loads(out)["f"] == "u/w^3"
    code, out, _ = run("charform", "--expr", "x/y", "--json")
    assert json.loads(out)["char_form"]["level"] == 2


def test_oracle_json_deterministic():
    args = ("oracle", "--expr", "x/y^9", "--max-mu", "3", "--max-deg", "2", "--trials", "10", "--seed", "3", "--json")
    first, second = run(*args)[1], run(*args)[1]
    assert first == second
    assert json.loads(first)["dt_ceiling"] == 9


def test_input_file(tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("# tower\nx/y^9\n\ny^-2  # classical\n")
    code, out, _ = run("conductor", "--in", str(path), "--json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [d["dimtot"] for d in lines] == [9, 3]


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["conductor", "--expr", "x^(1/3)"], 1),
        (["conductor"], 1),
        (["bogus"], 1),
        (["check", "--expr", "x"], 1),
        (["conductor", "--p", "4", "--expr", "x"], 2),
        (["basechange", "--da", "-1", "--expr", "x"], 2),
        (["charform", "--expr", "1"], 0),
        (["conductor", "--in", "/nonexistent/file"], 2),
    ],
)
def test_exit_codes(argv, expected):
    assert run(*argv)[0] == expected


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ramcalc", "conductor", "--expr", "x/y^9", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["swan"] == 9


def test_cli_is_a_thin_adapter():
    """No arithmetic in the CLI: it never touches field internals or coefficient codes."""
    tree = ast.parse(pathlib.Path(cli.__file__).read_text())
    attrs = {node.attr for node in ast.walk(tree) if isinstance(node, ast.Attribute)}
    assert not attrs & {"_terms", "fq", "mul", "add", "frob", "root", "trace"}
    numeric = (ast.Mult, ast.Pow, ast.Div, ast.FloorDiv, ast.Sub)
    assert not [node for node in ast.walk(tree) if isinstance(node, ast.BinOp) and isinstance(node.op, numeric)]

from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from indpoly.cli import main
from indpoly.enumeration import CONNECTED_GRAPH_COUNTS, FREE_TREE_COUNTS


def run(argv, stdin_text=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin_text))
    return code, out.getvalue()


def test_poly_literal_graph6():
    code, text = run(["poly", "Cl"])
    assert code == 0
    assert text.splitlines() == ["1 + 4x + 2x^2", "[1, 4, 2]"]


def test_poly_stats_and_strategy():
    code, text = run(["poly", "Bw", "--strategy", "max-degree", "--stats"])
    assert code == 0
    lines = text.splitlines()
    assert lines[1] == "[1, 3]"
    assert len(lines) >= 3


def test_eval_from_stdin_and_file(tmp_path):
    code, text = run(["eval", "-"], "F?ovo\n")
    assert code == 0 and text == "1\n"
    path = tmp_path / "sq.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    code, text = run(["eval", str(path), "--at", "1"])
    assert code == 0 and text == "7\n"


def test_eval_multiple_graph6_lines():
    code, text = run(["eval", "-"], "A_\nBw\n@\n")
    assert text == "-1\n-2\n0\n"


def test_oracle_agrees_with_poly():
    _, a = run(["poly", "D?{"])
    _, b = run(["oracle", "D?{"])
    assert a == b


def test_props():
    code, text = run(["props", "Cl"])
    assert code == 0
    assert "girth: 4" in text
    assert "cyclomatic: 1" in text


def test_construct_and_pipe():
    code, g6 = run(["construct", "corona(path(5))"])
    assert code == 0
    code, text = run(["eval", "-"], g6)
    assert text == "0\n"
    code, edges = run(["construct", "fig22g()", "--out", "edges"])
    assert edges.startswith("n 12\n")
    assert run(["eval", "-"], edges)[1] == "5\n"


def test_construct_errors():
    assert run(["construct", "bogus(1)"])[0] == 2
    assert run(["construct", "path(5"])[0] == 2


def test_bad_input_exit_codes(capsys):
    assert run(["eval", "B~~"])[0] == 2
    assert "error:" in capsys.readouterr().err
    assert run(["eval", "-"], "")[0] == 2
    assert run(["nope"])[0] == 2
    assert run(["search", "--nu", "2", "--target", "9"])[0] == 2
    assert run(["enumerate", "--kind", "trees", "--n", "17"])[0] == 2
    assert run(["verify", "theorem6", "--jobs", "0"])[0] == 2


def test_verify_with_report(tmp_path):
    report = tmp_path / "r.jsonl"
    code, text = run(["verify", "theorem6", "--max-n", "9", "--report", str(report)])
    assert code == 0
    assert text == "theorem6: 94 trees, 0 failures\n"
    records = [json.loads(line) for line in report.read_text().splitlines()]
    assert records[-1]["case"] == "summary" and records[-1]["status"] == "pass"


def test_search_and_coverage():
    code, text = run(["search", "--nu", "3", "--target", "5"])
    assert code == 0 and "FoundWitness" in text and "fig22g()" in text
    code, text = run(["coverage", "--nu", "1"])
    assert text.splitlines()[-2:] == ["nu=1: 5 of 5 values realised", "missing: none"]


@pytest.mark.parametrize("n", [1, 5, 9])
def test_enumerate_trees(n):
    code, text = run(["enumerate", "--kind", "trees", "--n", str(n)])
    assert code == 0 and len(text.splitlines()) == FREE_TREE_COUNTS[n - 1]


def test_enumerate_connected_with_nu():
    _, text = run(["enumerate", "--kind", "connected", "--n", "6"])
    assert len(text.splitlines()) == CONNECTED_GRAPH_COUNTS[5]
    _, text = run(["enumerate", "--kind", "connected", "--n", "5", "--nu", "0"])
    assert len(text.splitlines()) == FREE_TREE_COUNTS[4]
    assert run(["enumerate", "--kind", "trees", "--n", "5", "--nu", "1"]) == (0, "")


def test_repeated_runs_are_byte_identical():
    argvs = [
        ["search", "--nu", "4", "--target", "11", "--seed", "7"],
        ["coverage", "--nu", "2", "--seed", "1"],
        ["verify", "families", "--seed", "3"],
        ["enumerate", "--kind", "connected", "--n", "5"],
    ]
    for argv in argvs:
        assert run(argv) == run(argv)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "indpoly.cli", "eval", "Bw"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "-2\n"

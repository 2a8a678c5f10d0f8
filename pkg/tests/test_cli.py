from __future__ import annotations

import json
import subprocess
import sys

import pytest

from outerlabel.cli import main, parse_graph_text
from outerlabel.generators import gen_gl
from outerlabel.graph import format_edge_list, to_graph6

C6 = "EhEG"


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_label_hexagon(capsys):
    code, out, _ = run(capsys, "label", "--graph6", C6)
    doc = json.loads(out)
    assert code == 0 and doc["labels"] == [0, 2, 4, 0, 2, 4] and doc["span"] == 4


def test_label_file(capsys, tmp_path):
    p = tmp_path / "g4.edges"
    p.write_text(format_edge_list(gen_gl(4).graph))
    code, out, _ = run(capsys, "label", "-f", str(p), "--strategy", "hybrid")
    doc = json.loads(out)
    assert code == 0 and doc["span"] <= 6 and len(doc["labels"]) == 10


def test_label_k4(capsys):
    code, _, err = run(capsys, "label", "--graph6", "C~")
    assert code == 3 and "not outerplanar" in err


def test_label_formats(capsys):
    _, dot, _ = run(capsys, "label", "--graph6", "Bw", "--format", "dot")
    assert dot.startswith("graph G {")
    _, text, _ = run(capsys, "label", "--graph6", "Bw", "--format", "text")
    assert text.splitlines()[-1] == "span 4"


@pytest.mark.parametrize("code6, value", [("Bw", "4"), ("A_", "2")])
def test_lambda(capsys, code6, value):
    code, out, _ = run(capsys, "lambda", "--graph6", code6)
    assert code == 0 and out.splitlines()[0] == value
    assert "certificate" in out


def test_lambda_gl4(capsys):
    g6 = to_graph6(gen_gl(4).graph).decode()
    code, out, _ = run(capsys, "lambda", "--graph6", g6, "--format", "json")
    doc = json.loads(out)
    assert doc["lambda"] == 6 and doc["certificate"]["k"] == 5


def test_lambda_budget(capsys):
    g6 = to_graph6(gen_gl(5).graph).decode()
    code, _, _ = run(capsys, "lambda", "--graph6", g6, "--budget", "5")
    assert code == 5


def test_lambda_feasibility(capsys):
    _, out, _ = run(capsys, "lambda", "--graph6", "Bw", "--k", "3")
    assert out.startswith("infeasible")


def test_verify_p3(capsys, tmp_path):
    g = tmp_path / "p3.edges"
    g.write_text("3 2\n0 1\n1 2\n")
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"k": 6, "labels": [0, 3, 0]}))
    code, out, _ = run(capsys, "verify", "-f", str(g), "--labeling", str(f))
    assert code == 1 and out.count("distance-2") == 1


def test_verify_range(capsys, tmp_path):
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"k": 6, "labels": [0, 5]}))
    code, _, _ = run(capsys, "verify", "--graph6", "A_", "--labeling", str(f), "--k", "4")
    assert code == 1


def test_gen_and_enumerate(capsys):
    code, out, _ = run(capsys, "gen", "gl", "4", "--format", "graph6")
    assert code == 0 and len(out.split()) == 1 and out[0] == chr(63 + 10)
    _, out, _ = run(capsys, "enumerate", "5")
    assert len(out.splitlines()) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["label", "--graph6", "!!"],
        ["label"],
        ["enumerate", "99"],
        ["gen", "gl", "2"],
        ["verify", "--graph6", "Bw"],
    ],
)
def test_parse_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_stdin_detection(capsys, monkeypatch):
    code, out, _ = run(capsys, "label", "-", stdin="2 1\n0 1\n", monkeypatch=monkeypatch)
    assert json.loads(out)["labels"] == [0, 2]
    g, doc = parse_graph_text('{"graph6": "Bw", "labels": [0, 2, 4], "k": 6}')
    assert g.m == 3 and doc["labels"] == [0, 2, 4]


@pytest.mark.parametrize("family, param", [("gl", 5), ("cycle", 9), ("path", 6), ("random", 120)])
def test_pipeline_round_trip(family, param):
    # gen | label - | verify -, in real processes
    exe = [sys.executable, "-m", "outerlabel"]
    gen = subprocess.run([*exe, "gen", family, str(param), "--seed", "4"], capture_output=True, text=True)
    lab = subprocess.run([*exe, "label", "-"], input=gen.stdout, capture_output=True, text=True)
    ver = subprocess.run([*exe, "verify", "-"], input=lab.stdout, capture_output=True, text=True)
    assert (gen.returncode, lab.returncode, ver.returncode) == (0, 0, 0)
    again = subprocess.run([*exe, "label", "-"], input=gen.stdout, capture_output=True, text=True)
    assert again.stdout == lab.stdout

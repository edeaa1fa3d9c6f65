import json
import subprocess
import sys

import pytest

from nbc import Coloring, Graph, partition_from_coloring, reduce_partition
from nbc import formats
from nbc.cli import main
from nbc.formats import FormatError


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("# four-cycle\n4 4\n0 1\n1 2\n\n2 3\n0 3\n")
    return path


def test_edge_list_roundtrip(tmp_path):
    g = Graph(6, [(0, 5), (1, 2), (2, 3)])
    formats.write_graph(g, tmp_path / "g.txt")
    assert (tmp_path / "g.txt").read_text() == "6 3\n0 5\n1 2\n2 3\n"
    assert formats.read_graph(tmp_path / "g.txt") == g


@pytest.mark.parametrize("text", [
    "", "4\n", "3 1\n0 1\n1 2\n", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n0 1\n", "3 1\n0 x\n",
])
def test_edge_list_rejects(text):
    with pytest.raises(FormatError):
        formats.parse_edge_list(text)


def test_coloring_format():
    assert formats.parse_coloring("BRRB\n").to_string() == "BRRB"
    assert formats.parse_coloring("0110").to_string() == "BRRB"
    with pytest.raises(FormatError):
        formats.parse_coloring("BRR", n=4)
    with pytest.raises(FormatError):
        formats.parse_coloring("BRQB")


def test_layout_roundtrip(tmp_path):
    for anchored in (False, True):
        _, layout = reduce_partition((1, 4, 3), anchored=anchored)
        formats.write_layout(layout, tmp_path / "l.json")
        assert formats.read_layout(tmp_path / "l.json") == layout
    data = json.loads((tmp_path / "l.json").read_text())
    assert data["format"] == "nbc-layout/1"
    assert data["roles"][0] == {"role": "v1"}
    assert data["roles"][4] == {"role": "numeric", "pack": 0, "index": 0}


def test_layout_rejects_unknown_version(tmp_path):
    (tmp_path / "l.json").write_text(json.dumps({"format": "nbc-layout/99"}))
    with pytest.raises(FormatError):
        formats.read_layout(tmp_path / "l.json")


def test_dot_export():
    g, layout = reduce_partition((2,))
    dot = formats.to_dot(g, Coloring.uniform(g.n), layout)
    assert dot.startswith("graph G {")
    assert dot.count("shape=box") == 2
    assert dot.count(" -- ") == g.m
    assert 'xlabel="v1"' in dot


def test_verify_balanced(c4_file, tmp_path, capsys):
    (tmp_path / "c.txt").write_text("BBRR\n")
    assert main(["verify", "--graph", str(c4_file), "--coloring", str(tmp_path / "c.txt")]) == 0
    assert capsys.readouterr().out == "penalty=0\n"


def test_verify_unbalanced(c4_file, tmp_path, capsys):
    (tmp_path / "c.txt").write_text("BRBR\n")
    assert main(["verify", "--graph", str(c4_file), "--coloring", str(tmp_path / "c.txt")]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "penalty=8"
    assert out[1:] == [
        "vertex 0: red=2 blue=0",
        "vertex 1: red=0 blue=2",
        "vertex 2: red=2 blue=0",
        "vertex 3: red=0 blue=2",
    ]


def test_verify_length_mismatch(c4_file, tmp_path, capsys):
    (tmp_path / "c.txt").write_text("BRB\n")
    assert main(["verify", "--graph", str(c4_file), "--coloring", str(tmp_path / "c.txt")]) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("items, counts", [("1,4,3", "vertices=28 edges=48"), ("2", "vertices=11 edges=16")])
def test_reduce(items, counts, tmp_path, capsys):
    args = ["reduce", items, "--out-graph", str(tmp_path / "g.txt"), "--out-layout", str(tmp_path / "l.json")]
    assert main(args) == 0
    assert capsys.readouterr().out.strip() == counts
    g = formats.read_graph(tmp_path / "g.txt")
    assert f"vertices={g.n} edges={g.m}" == counts


def test_reduce_rejects_nonpositive(tmp_path, capsys):
    args = ["reduce", "0,3", "--out-graph", str(tmp_path / "g"), "--out-layout", str(tmp_path / "l")]
    assert main(args) == 2
    assert not (tmp_path / "g").exists()


def test_oracle(capsys):
    assert main(["oracle", "1,4,3"]) == 0
    assert capsys.readouterr().out.strip() == "S1 = {4}, S2 = {1, 3}"
    assert main(["oracle", "1,2"]) == 1
    assert capsys.readouterr().out.strip() == "no partition"
    assert main(["oracle", ",".join(["1"] * 30)]) == 2


def test_unknown_flag_rejected(c4_file):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--graph", str(c4_file), "--colour", "x"])
    assert exc.value.code != 0


def test_solve_outputs(c4_file, tmp_path, capsys):
    assert main(["solve", "--algo", "exact", "--graph", str(c4_file)]) == 0
    assert capsys.readouterr().out == "RRBB\npenalty=0 evaluations=8\n"
    trace = tmp_path / "t.csv"
    assert main(["solve", "--algo", "ga", "--graph", str(c4_file), "--seed", "5",
                 "--pop-size", "10", "--generations", "20", "--trace", str(trace)]) == 0
    lines = trace.read_text().splitlines()
    assert lines[0] == "generation,best_penalty"
    assert lines[-1].endswith(",0")
    assert main(["solve", "--algo", "random", "--graph", str(c4_file), "--trace", str(trace)]) == 2


def test_solve_bad_params(c4_file):
    assert main(["solve", "--algo", "ga", "--graph", str(c4_file), "--pop-size", "3"]) == 2


def test_gen(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--n", "12", "--p", "0.5", "--seed", "3", "--even", "--out", str(out)]) == 0
    g = formats.read_graph(out)
    assert all(g.degree(v) % 2 == 0 for v in range(g.n))


def test_export_dot(c4_file, tmp_path):
    (tmp_path / "c.txt").write_text("BBRR\n")
    out = tmp_path / "g.dot"
    assert main(["export-dot", "--graph", str(c4_file), "--coloring", str(tmp_path / "c.txt"),
                 "--out", str(out)]) == 0
    assert out.read_text().count('fillcolor="red"') == 2


def test_round_trip_pipeline(tmp_path, capsys):
    """reduce -> solve exact -> verify, then decode the coloring via the layout."""
    g_path, l_path, c_path = tmp_path / "g.txt", tmp_path / "l.json", tmp_path / "c.txt"
    assert main(["reduce", "2,2", "--out-graph", str(g_path), "--out-layout", str(l_path)]) == 0
    assert main(["solve", "--algo", "exact", "--graph", str(g_path), "--out", str(c_path)]) == 0
    solve_out = capsys.readouterr().out.splitlines()[-1]
    assert main(["verify", "--graph", str(g_path), "--coloring", str(c_path)]) == 0
    verify_out = capsys.readouterr().out.splitlines()[0]
    assert solve_out.split()[0] == verify_out == "penalty=0"
    layout = formats.read_layout(l_path)
    s1, s2 = partition_from_coloring(layout, formats.read_coloring(c_path))
    assert sorted(layout.items[i] for i in s1) == [2]
    assert main(["oracle", "2,2"]) == 0


def test_module_entry_point(c4_file):
    proc = subprocess.run([sys.executable, "-m", "nbc", "solve", "--algo", "exact", "--graph", str(c4_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.endswith("penalty=0 evaluations=8\n")

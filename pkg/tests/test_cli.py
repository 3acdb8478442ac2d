import json
import subprocess
import sys

import pytest

from binedge.cli import main
from binedge.figures import theta_222_whiskers
from binedge.io import format_edge_list, to_graph6


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("# four-cycle\n4\n1 2\n2 3\n3 4\n1 4\n")
    return str(p)


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def lines(out):
    return [json.loads(s) for s in out.splitlines()]


def test_cutsets(capsys, c4_file):
    code, out, _ = run(capsys, "cutsets", c4_file)
    assert code == 0
    assert [d["T"] for d in lines(out)] == [[], [1, 3], [2, 4]]
    code, out, _ = run(capsys, "cutsets", "--max-size", "0", c4_file)
    assert [d["T"] for d in lines(out)] == [[]]


def test_primes_unmixed_dim(capsys, c4_file):
    _, out, _ = run(capsys, "primes", c4_file)
    assert [d["height"] for d in lines(out)] == [3, 4, 4]
    _, out, _ = run(capsys, "unmixed", c4_file)
    assert lines(out) == [{"unmixed": False, "witness": {"T": [2, 4], "c": 2, "parts": [[1], [3]]}}]
    _, out, _ = run(capsys, "dim", c4_file)
    assert lines(out) == [{"dim": 5}]


def test_info_and_classify(capsys, c4_file):
    _, out, _ = run(capsys, "info", c4_file)
    rep = lines(out)[0]
    assert list(rep) == [
        "n", "m", "component_count", "deviation", "is_cactus", "is_bicyclic", "block_tree",
        "free_vertices", "unmixed", "cm_status", "certificate", "cutset_count", "dim",
    ]
    assert rep["unmixed"] == "skipped" and rep["cm_status"] == "not_unmixed"
    code, out, _ = run(capsys, "classify", "--verify", c4_file)
    rep = lines(out)[0]
    assert code == 0 and rep["unmixed"] is False and rep["cutset_count"] == 3 and rep["dim"] == 5


def test_reports_are_byte_stable(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(format_edge_list(theta_222_whiskers()))
    outs = {run(capsys, "classify", "--verify", str(p))[1] for _ in range(3)}
    assert len(outs) == 1
    rep = json.loads(outs.pop())
    assert rep["cm_status"] == "unmixed_not_cm" and rep["certificate"]["template"] == "U-A"


def test_graph6_input_and_stdin(capsys, tmp_path, monkeypatch):
    p = tmp_path / "g.g6"
    p.write_text(to_graph6(theta_222_whiskers()) + "\n")
    code, out, _ = run(capsys, "classify", str(p))
    assert code == 0 and lines(out)[0]["cm_status"] == "unmixed_not_cm"
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("3\n1 2\n2 3\n"))
    code, out, _ = run(capsys, "decompose", "-")
    d = lines(out)[0]
    assert [p["vertices"] for p in d["pieces"]] == [[1, 2], [2, 3]]
    assert d["glue"] == [[2, 0, 1]]


def test_disconnected_classification_uses_original_labels(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("7\n1 2\n4 5\n5 6\n6 7\n7 4\n")
    _, out, _ = run(capsys, "classify", str(p))
    rep = lines(out)[0]
    comps = rep["certificate"]["components"]
    assert [c["vertices"] for c in comps] == [[1, 2], [3], [4, 5, 6, 7]]
    assert comps[2]["certificate"]["cutset"]["T"] == [5, 7]


def test_export(capsys, c4_file):
    code, out, _ = run(capsys, "export", c4_file, "--dialect", "singular")
    assert code == 0 and "minAssGTZ" in out


@pytest.mark.parametrize(
    "content, code",
    [("4\n1 2\n1 2\n", 2), ("4\n1 5\n", 2), ("~~abc\n", 2), ("4\n1 x\n", 2)],
)
def test_input_errors(capsys, tmp_path, content, code):
    p = tmp_path / "bad.txt"
    p.write_text(content)
    got, _, err = run(capsys, "info", str(p))
    assert got == code and err.startswith("error:")


def test_missing_file(capsys):
    assert run(capsys, "info", "/nonexistent/graph.txt")[0] == 2


def test_cap_exit_code(capsys, c4_file):
    code, _, err = run(capsys, "--cap", "2", "dim", c4_file)
    assert code == 3 and "cap" in err


def test_census_and_selfcheck(capsys):
    code, out, _ = run(capsys, "census", "--exhaustive", "4", "--checks", "block_tree")
    assert code == 0 and json.loads(out)["graphs_seen"] == 38
    code, out, _ = run(capsys, "census", "--cactus", "2", "--kinds", "K2,C4", "--checks", "oracle_classifier")
    assert code == 0
    assert run(capsys, "census", "--exhaustive", "9")[0] == 2
    code, out, _ = run(capsys, "selfcheck")
    assert code == 0 and "FAIL" not in out


def test_console_entry_point(c4_file):
    r = subprocess.run([sys.executable, "-m", "binedge", "dim", c4_file], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout) == {"dim": 5}

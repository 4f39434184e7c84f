import json

import pytest

from qclaw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def a2_file(tmp_path, capsys):
    path = tmp_path / "a2.json"
    assert main(["init", "--type", "A2", "--word", "1,2,1", "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def test_init(capsys):
    code, out, _ = run(capsys, "init", "--type", "A3", "--word", "1,2,1,3,2,1")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "qclaw/1"
    assert doc["exchangeable"] == [1, 2, 3] and doc["frozen"] == [4, 5, 6]
    code, out, _ = run(capsys, "init", "--matrix", "2,-1;-1,2", "--word", "1,2,1")
    assert code == 0 and json.loads(out)["exchangeable"] == [1]


def test_init_errors(capsys):
    code, _, err = run(capsys, "init", "--type", "A1", "--word", "1,1")
    assert code == 2 and "NotReduced" in err
    assert run(capsys, "init", "--type", "X9", "--word", "1")[0] == 2
    assert run(capsys, "init", "--word", "1")[0] == 2


def test_mutate(capsys, a2_file):
    original = a2_file.read_text()
    code, out, _ = run(capsys, "mutate", str(a2_file), "--at", "1", "--at", "1")
    assert code == 0 and out == original
    code, out, _ = run(capsys, "mutate", str(a2_file))
    assert out == original
    code, out, _ = run(capsys, "mutate", str(a2_file), "--at", "1")
    terms = json.loads(out)["expansions"][0]
    assert sorted(t["exponent"] for t in terms) == [[-1, 0, 1], [-1, 1, 0]]
    assert run(capsys, "mutate", str(a2_file), "--at", "2")[0] == 2


def test_mutate_from_stdin(capsys, a2_file, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(a2_file.read_text()))
    code, out, _ = run(capsys, "mutate", "-", "--at", "1,1")
    assert code == 0 and out == a2_file.read_text()


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--type", "A2", "--word", "1,2,1", "--at", "1")
    doc = json.loads(out)
    assert doc["variables"][0]["label"] == "x1'"
    assert doc["variables"][0]["weight"] == [0, -1]
    code, out, _ = run(capsys, "expand", "--type", "A2", "--word", "1,2,1", "--monomial", "1,1,0")
    # normalized monomials of the initial seed are plain torus monomials
    assert json.loads(out)["terms"] == [{"coeff": "1*v^0", "exponent": [1, 1, 0]}]


def test_graph_and_dot(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "--type", "A2", "--word", "1,2,1", "--dot", str(dot))
    doc = json.loads(out)
    assert code == 0 and doc["node_count"] == 2 and doc["edge_count"] == 1 and doc["closed"]
    assert dot.read_text().startswith("graph")
    code, out, _ = run(capsys, "graph", "--type", "A1", "--word", "1")
    assert json.loads(out)["node_count"] == 1 and json.loads(out)["edge_count"] == 0
    code, out, _ = run(capsys, "export-dot", "--type", "A2", "--word", "1,2,1")
    assert code == 0 and "n0 -- n1" in out


def test_check(capsys, a2_file):
    code, out, err = run(capsys, "check", str(a2_file), "--suite", "all")
    doc = json.loads(out)
    assert code == 0 and doc["suite_count"] == 9 and doc["violation_count"] == 0
    assert "rng seed" in err
    code, out, _ = run(capsys, "check", str(a2_file), "--suite", "dominance", "--seed", "3")
    doc = json.loads(out)
    assert doc["rng_seed"] == 3 and doc["suites"][0]["violation_count"] == 0


def test_check_exit_codes(capsys, tmp_path, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "check", str(bad))[0] == 2
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check", "--type", "A2", "--word", "1,2,1", "--suite", "bogus")[0] == 2
    from qclaw import analysis

    monkeypatch.setattr(analysis, "tropical_L", lambda s, k, g: tuple(g))
    assert run(capsys, "check", "--type", "A2", "--word", "1,2,1", "--suite", "transport")[0] == 1

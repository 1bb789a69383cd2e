import json
import subprocess
import sys

import pytest

from domipoly import catalog
from domipoly.cli import main
from domipoly.families import tree_pair
from domipoly.graph import path_graph
from domipoly.graph6 import emit_graph6

P3_EDGES = "3 2\n0 1\n1 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def p3_file(tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text(P3_EDGES)
    return str(f)


@pytest.fixture
def tree_catalog(tmp_path):
    t1, t2 = tree_pair()
    f = tmp_path / "trees.g6"
    f.write_text("".join(emit_graph6(g) + "\n" for g in (t1, t2, path_graph(12))))
    return str(f)


@pytest.mark.parametrize(
    "argv, expect",
    [
        (["--g6", "A_"], "1 + 2*x*y + x^2"),
        (["--g6", "@"], "1 + x"),
        (["--g6", "A_", "--oracle"], "1 + 2*x*y + x^2"),
    ],
)
def test_compute(capsys, argv, expect):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == 0
    assert out == expect + "\n"


def test_compute_edges_oracle(capsys, p3_file):
    code, out, _ = run(capsys, "compute", "--edges", p3_file, "--oracle")
    assert (code, out) == (0, "1 + 2*x*y + x*y^2 + 3*x^2*y + x^3\n")


def test_compute_json_with_trace(capsys):
    code, out, _ = run(capsys, "compute", "--g6", emit_graph6(path_graph(14)), "--json", "--trace")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 14
    assert data["trace"]["records"]


def test_compute_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\n"))
    code, out, _ = run(capsys, "compute")
    assert (code, out) == (0, "1 + 3*x*y^2 + 3*x^2*y + x^3\n")


def test_exit_codes(capsys, tmp_path, monkeypatch):
    assert run(capsys, "compute", "--g6", "Bx")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 5\n0 1\n")
    assert run(capsys, "compute", "--edges", str(bad))[0] == 2
    assert run(capsys, "compute", "--edges", str(tmp_path / "missing"))[0] == 2
    monkeypatch.setenv("DOMIPOLY_ORACLE_CAP", "5")
    assert run(capsys, "compute", "--g6", emit_graph6(path_graph(6)), "--oracle")[0] == 3
    assert run(capsys, "compute", "--g6", emit_graph6(path_graph(6)), "--oracle", "--oracle-cap", "6")[0] == 0


@pytest.mark.parametrize(
    "g6, expect",
    [("@", "t"), ("Bg", "t + 3*t^2 + t^3"), ("Bw", "3*t + 3*t^2 + t^3")],
)
@pytest.mark.parametrize("route", ["coeff", "transform", "both"])
def test_dominate(capsys, g6, expect, route):
    code, out, _ = run(capsys, "dominate", "--g6", g6, "--route", route)
    assert (code, out) == (0, expect + "\n")


def test_compare(capsys):
    t1, t2 = tree_pair()
    code, out, _ = run(capsys, "compare", "--g6", emit_graph6(t1), "--g6", emit_graph6(t2))
    assert code == 0
    assert "polynomials: equal" in out and "non-isomorphic" in out
    code, out, _ = run(capsys, "compare", "--g6", emit_graph6(path_graph(4)), "--g6", "Cs")
    assert code == 1 and "different" in out
    code, out, _ = run(capsys, "compare", "--g6", "Cs", "--g6", "Cs")
    assert code == 0 and "isomorphism screen: isomorphic" in out
    assert run(capsys, "compare", "--g6", "Cs")[0] == 2


def test_collide_tree_catalog(capsys, tree_catalog):
    code, out, _ = run(capsys, "collide", tree_catalog)
    assert code == 0
    assert out.splitlines()[0] == "graphs: 3  classes shown: 1  with collisions: 1"
    assert "lines 1 and 2: non-isomorphic" in out
    assert "line 3" not in out
    code, out_all, _ = run(capsys, "collide", tree_catalog, "--all")
    assert "line 3:" in out_all


def test_collide_single_graph_empty(capsys, tmp_path):
    f = tmp_path / "one.g6"
    f.write_text("Bw\n")
    code, out, _ = run(capsys, "collide", str(f))
    assert code == 0 and "classes shown: 0" in out


def test_collide_malformed_line(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("A_\nBw\nBx\n")
    code, _, err = run(capsys, "collide", str(f))
    assert code == 2 and "line 3" in err


def test_collide_deterministic_across_workers(tmp_path):
    f = tmp_path / "c6.g6"
    f.write_text("".join(emit_graph6(g) + "\n" for g in catalog.connected_graphs(6)))
    outs = set()
    for w in ("1", "3"):
        for _ in range(2):
            r = subprocess.run(
                [sys.executable, "-m", "domipoly", "collide", str(f), "--workers", w],
                capture_output=True, check=True,
            )
            outs.add(r.stdout)
    assert len(outs) == 1


def test_family(capsys):
    code, out, _ = run(capsys, "family", "fig1-trees")
    t1, t2 = tree_pair()
    assert (code, out) == (0, f"{emit_graph6(t1)}\n{emit_graph6(t2)}\n")
    code, out, _ = run(capsys, "family", "L-pair", "--base", "K2", "--anchors", "0,1")
    from domipoly.graph6 import parse_graph6

    assert [parse_graph6(s).n for s in out.split()] == [16, 16]
    code, out, _ = run(capsys, "family", "M-pair", "--base", "P4", "--a", "0", "--b", "3", "--format", "edges")
    assert code == 0 and out.startswith("6 7\n")
    assert run(capsys, "family", "M-pair", "--base", "P4", "--a", "0", "--b", "1")[0] == 2
    assert run(capsys, "family", "L-pair", "--base", "K2", "--anchors", "5")[0] == 2
    assert run(capsys, "family", "L-pair")[0] == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", "lemmas", "--max-n", "5")
    assert code == 0 and "FAIL" not in out
    code, out, err = run(capsys, "check", "lemmas", "--max-n", "0")
    assert code == 0 and "warning" in err
    code, out, _ = run(capsys, "check", "families", "--max-m", "4")
    assert code == 0 and out.rstrip().endswith("all checks passed")


def test_help_mentions_env_and_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["compute", "--help"])
    out = capsys.readouterr().out
    assert "DOMIPOLY_ORACLE_CAP" in out
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "Exit codes" in capsys.readouterr().out

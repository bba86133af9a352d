"""Command-line surface: documented invocations, exit codes, determinism."""

import json
import shutil
import subprocess

import pytest

from homtopo.cli import main, resolve_graph
from homtopo.errors import DomainError
from homtopo.graphs import complete, petersen


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_resolve_graph(tmp_path):
    assert resolve_graph("petersen") == petersen()
    assert resolve_graph("K9") == complete(9)    # beyond the corpus list
    assert resolve_graph("Q3").n == 8
    p = tmp_path / "g.json"
    p.write_text('{"n": 2, "edges": [[0, 1]]}')
    assert resolve_graph(str(p)) == complete(2)
    with pytest.raises(DomainError):
        resolve_graph("no-such-graph")


def test_hom_reports(capsys):
    code, obj = run_json(capsys, "hom", "--source", "K2", "--target", "K4",
                         "--betti")
    assert code == 0 and obj["betti"] == [1, 0, 1]
    code, obj = run_json(capsys, "hom", "--source", "C7", "--target", "K3",
                         "--components")
    assert code == 0 and obj["components"] == 2
    code, obj = run_json(capsys, "hom", "--source", "C5", "--target", "K4",
                         "--betti")
    assert code == 0 and obj["betti"] == [1, 1, 1, 1]
    code, obj = run_json(capsys, "hom", "--source", "C5", "--target", "K3",
                         "--fvector", "--emit-cells")
    assert obj["f_vector"] == [30, 30] and len(obj["cell_list"]) == 60


def test_hom_exit_codes(capsys):
    code, _ = run(capsys, "hom", "--source", "Kxx", "--target", "K3")
    assert code == 2
    code, _ = run(capsys, "hom", "--source", "K4", "--target", "K7",
                  "--budget", "100")
    assert code == 3


def test_reduce_core(capsys):
    code, obj = run_json(capsys, "reduce", "core", "--graph", "L5")
    assert code == 0 and obj["core"]["n"] == 2
    assert len(obj["trace"]["removed"]) == 3
    code, obj = run_json(capsys, "reduce", "core", "--graph", "L5",
                         "--policy", "random:5")
    assert code == 0 and obj["core"]["n"] == 2
    code, _ = run(capsys, "reduce", "core", "--graph", "L5",
                  "--policy", "sideways")
    assert code == 2


def test_morse_kmn(capsys):
    code, obj = run_json(capsys, "morse", "kmn", "--m", "3", "--n", "4")
    assert code == 0
    assert obj == {"acyclic": True, "critical": 12, "matched_pairs": 6,
                   "m": 3, "n": 4, "cells": 24}
    code, _ = run(capsys, "morse", "kmn", "--m", "5", "--n", "4")
    assert code == 2


def test_equivariant_bound(capsys):
    code, obj = run_json(capsys, "equivariant", "bound",
                         "--graph", "petersen")
    assert code == 0 and obj["bound"] == 3 and obj["free"] is True
    code, _ = run(capsys, "equivariant", "bound", "--graph", "K3o")
    assert code == 2


def test_formulas(capsys):
    code, obj = run_json(capsys, "formulas", "f", "--m", "4", "--n", "6")
    assert code == 0 and obj["f"] == 479
    code, obj = run_json(capsys, "formulas", "chi", "--m", "3", "--n", "4")
    assert code == 0 and obj["chi"] == -12
    code, obj = run_json(capsys, "formulas", "c", "--t", "6")
    assert code == 0 and obj["components"] == 7
    code, obj = run_json(capsys, "formulas", "gen", "--m", "3")
    assert code == 0 and obj["identity"] is True
    code, obj = run_json(capsys, "formulas", "mn", "--n", "3")
    assert code == 0 and obj["f_vector"] == [14, 24, 12]
    code, _ = run(capsys, "formulas", "mn", "--n", "99")
    assert code == 3
    code, out = run(capsys, "formulas", "table", "--max-m", "2",
                    "--max-n", "3", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "m,n,f,chi"
    assert "2,3,1,0" in out.splitlines()


def test_formulas_pretty(capsys):
    code, out = run(capsys, "formulas", "f", "--m", "3", "--n", "4",
                    "--pretty")
    assert code == 0 and "13" in out and "{" not in out


def test_verify_subset(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, obj = run_json(capsys, "verify", "fast", "--only", "exclusions",
                         "--stable", "--json", str(out_path))
    assert code == 0 and obj["status"] == "pass"
    assert [c["name"] for c in obj["checks"]] == ["exclusions"]
    assert "elapsed" not in obj["checks"][0]
    assert json.loads(out_path.read_text()) == obj


def test_verify_determinism(capsys):
    args = ("verify", "fast", "--only", "cayley-graph", "--stable")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_verify_overrides(capsys, tmp_path):
    cfg = tmp_path / "budgets.cfg"
    cfg.write_text("# comment\ncore_graphs = 5\ncore_trials = 3\n")
    code, obj = run_json(capsys, "verify", "fast", "--only",
                         "core-uniqueness", "--config", str(cfg), "--stable")
    assert code == 0
    assert obj["checks"][0]["computed"]["graphs"] == 5
    code, obj = run_json(capsys, "verify", "fast", "--only",
                         "core-uniqueness", "--set", "core_graphs=4",
                         "--stable")
    assert code == 0 and obj["checks"][0]["computed"]["graphs"] == 4


def test_verify_usage_errors(capsys, tmp_path):
    code, _ = run(capsys, "verify", "fast", "--only", "nope")
    assert code == 2
    code, _ = run(capsys, "verify", "fast", "--set", "no_such_budget=1")
    assert code == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("just words\n")
    code, _ = run(capsys, "verify", "fast", "--config", str(bad))
    assert code == 2


def test_verify_pretty(capsys):
    code, out = run(capsys, "verify", "fast", "--only", "exclusions",
                    "--pretty")
    assert code == 0
    assert out.strip().endswith("PASS")
    assert "exclusions" in out


def test_console_script():
    exe = shutil.which("homtopo")
    if exe is None:
        pytest.skip("console script not on PATH")
    out = subprocess.run([exe, "formulas", "f", "--m", "3", "--n", "4"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout) == {"f": 13, "m": 3, "n": 4}

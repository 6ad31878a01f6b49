import json
import subprocess
import sys

import pytest

from srgborsuk import graph as gc
from srgborsuk.cli import main
from srgborsuk.reproduce import CHECKS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_params(capsys):
    code, rep = run(capsys, "check-params", 416, 100, 36, 20, "--no-timestamp")
    assert code == 0 and rep["status"] == "ok"
    assert rep["results"]["spectrum"]["f"] == 65
    assert rep["results"]["spectrum"]["s"] == "-4/1"
    code, rep = run(capsys, "check-params", 10, 3, 1, 1)
    assert code == 1 and rep["status"] == "failed" and rep["results"]["violations"]
    assert run(capsys, "check-params", 693, 180, 51, 45)[0] == 0


def test_malformed_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check-params", "416", "x", "36", "20"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_graph(tmp_path, capsys):
    pet = tmp_path / "petersen.g6"
    gc.write_graph6_file(pet, gc.petersen())
    code, rep = run(capsys, "verify-graph", pet)
    assert code == 0 and rep["results"]["params"] == [10, 3, 0, 1]
    code, rep = run(capsys, "verify-graph", pet, "--expect", "10,3,0,2")
    assert code == 1 and "parameter mismatch" in rep["failures"][0]
    code, rep = run(capsys, "verify-graph", gc.g2_4_path(), "--expect", "416,100,36,20")
    assert code == 0


def test_verify_graph_format_errors(tmp_path, capsys):
    data = gc.g2_4_path().read_bytes()
    bad = tmp_path / "trunc.g6"
    bad.write_bytes(data[:1000])
    code, rep = run(capsys, "verify-graph", bad)
    assert code == 2 and rep["failures"][0].startswith("truncated-bit-section")
    code, rep = run(capsys, "verify-graph", tmp_path / "missing.g6")
    assert code == 2


def test_verify_graph_not_srg(tmp_path, capsys):
    path = tmp_path / "p4.g6"
    gc.write_graph6_file(path, gc.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    code, rep = run(capsys, "verify-graph", path)
    assert code == 1 and rep["results"]["witness"] is not None


def test_gen_then_clique(tmp_path, capsys):
    path = tmp_path / "p.g6"
    code, rep = run(capsys, "gen", "petersen", "-o", path)
    assert code == 0 and rep["results"]["params"] == [10, 3, 0, 1]
    code, rep = run(capsys, "clique", path, "--chain", 1)
    assert code == 0
    assert rep["results"]["exact"]["size"] == 2 and rep["results"]["chain"]["size"] == 2
    code, rep = run(capsys, "gen", "triangular", 5, "-o", path, "--complement")
    assert rep["results"]["params"] == [10, 3, 0, 1]
    code, rep = run(capsys, "gen", "paley", "-o", path)
    assert code == 2


def test_invalid_generator_argument(tmp_path, capsys):
    code, rep = run(capsys, "gen", "paley", 7, "-o", tmp_path / "x.g6")
    assert code == 1 and rep["failures"][0].startswith("invalid-generator-argument")


def test_represent(capsys, tmp_path):
    code, rep = run(capsys, "represent", 31671, 3510, 693, 351)
    r = rep["results"]["representation"]
    assert code == 0 and (r["p"], r["q"], r["dim"]) == ("1/10", "-1/80", 782)
    assert rep["results"]["diameter"] == "nonadjacent-pairs"
    coords = tmp_path / "x.txt"
    code, rep = run(capsys, "represent", 416, 100, 36, 20, "--graph", gc.g2_4_path(),
                    "--rank", "modular", "--coords", coords)
    assert code == 0 and rep["results"]["gram_rank"] == 65
    assert coords.read_text().startswith("416 65\n")
    code, rep = run(capsys, "represent", 13, 6, 2, 3)
    assert code == 1 and rep["failures"][0].startswith("irrational-eigenvalue")


def test_bound_lift_slice(capsys):
    code, rep = run(capsys, "bound", 416, 5, 65)
    assert rep["results"]["claim"] == "b2(65) >= 84"
    code, rep = run(capsys, "lift", "--base", "g24", "--blocks", 2, "--extend", 1)
    assert code == 0 and rep["results"]["claim"] == "b2(133) >= 170"
    code, rep = run(capsys, "lift", "--base", "fi23")
    assert rep["results"]["claim"] == "b2(783) >= 1378"
    code, rep = run(capsys, "slice", "--fi23")
    assert rep["results"]["claims"] == ["b2(781) >= 1225", "b2(780) >= 1102", "b2(779) >= 1002"]
    code, rep = run(capsys, "slice", "--params", "416,100,36,20", "--local-lambda", 36, "--clique-bound", 5)
    assert rep["results"]["claims"][0] == "b2(64) >= 63"
    code, rep = run(capsys, "slice", "--params", "416,100,36,20")
    assert code == 2


def test_lift_witness(capsys, tmp_path):
    out = tmp_path / "w.txt"
    code, rep = run(capsys, "lift", "--base", "g24", "--blocks", 1, "--extend", 1, "--witness", out)
    assert code == 0
    assert rep["results"]["witness"]["shape"] == [418, 67]
    assert rep["results"]["witness"]["claim"] == "b2(67) >= 86"
    code, rep = run(capsys, "lift", "--base", "fi23", "--witness", out)
    assert code == 2


def test_deterministic_reports(capsys):
    argv = ["slice", "--fi23", "--no-timestamp"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    main(["slice", "--fi23"])
    assert "timestamp" in json.loads(capsys.readouterr().out)


def test_plain_output(capsys):
    assert main(["bound", "416", "5", "65", "--plain"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("bound: ok") and "b2(65) >= 84" in out


def test_reproduce_skip_graph(capsys):
    code, rep = run(capsys, "reproduce", "--skip-graph", "--no-timestamp")
    assert code == 0 and rep["results"]["passed"] == rep["results"]["total"]


def test_reproduce_full(capsys):
    code, rep = run(capsys, "reproduce", "--no-timestamp")
    assert code == 0
    assert all(a["ok"] for a in rep["results"]["assertions"])


def test_reproduce_corrupted_graph(tmp_path, capsys):
    bad = tmp_path / "g.g6"
    bad.write_bytes(gc.g2_4_path().read_bytes()[:5000])
    code, rep = run(capsys, "reproduce", "--graph", bad)
    assert code == 1 and "truncated-bit-section" in rep["results"]["first_failure"]


def test_reproduce_covers_every_acceptance_criterion():
    assert {c.criterion for c in CHECKS} == set(range(1, 12))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "srgborsuk", "check-params", "10", "3", "0", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["status"] == "ok"

import json

import pytest

from wqhswitch.cli import run
from wqhswitch.graphcore import graph6_decode, read_graph6


def run_ok(argv, code=0):
    assert run(argv) == code


def test_build(tmp_path):
    run_ok(["build", "--h", "2", "--m", "1", "--out", str(tmp_path)])
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["params"] == {"v": 96, "k": 20, "lambda": 4, "mu": 4}
    assert rep["field"]["modulus"] == 7
    assert rep["arc"]["profile"]["histogram"] == {"0": 6, "2": 15}
    assert read_graph6(tmp_path / "gamma.g6")[0].v == 96


def test_build_stdout(capsysbinary):
    run_ok(["build", "--h", "2", "--m", "1"])
    out = capsysbinary.readouterr()
    G = graph6_decode(out.out.splitlines()[0])
    assert G.v == 96 and G.num_edges() == 960
    assert json.loads(out.err)["params"]["k"] == 20


def test_build_m_not_less_than_h(capsys):
    assert run(["build", "--h", "2", "--m", "2"]) == 2
    assert "0 < m < h" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["build"],
    ["build", "--h", "2", "--m", "1", "--arc", "x.txt"],
    ["verify", "--t", "5"],
])
def test_usage_errors(argv):
    assert run(argv) == 2


def test_switch_then_verify(tmp_path, capsys):
    run_ok(["switch", "--h", "2", "--m", "1", "--out", str(tmp_path)])
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["hypotheses"]["passed"]
    assert rep["flipped_pairs"] == 64
    assert len(rep["hypotheses"]["switched"]) == 8
    assert rep["config"]["t"] == 5
    capsys.readouterr()
    run_ok(["verify", "--in", str(tmp_path / "gamma_prime.g6"), "--t", "5"])
    ver = json.loads(capsys.readouterr().out)
    assert ver["geometric"] is False
    assert len(ver["failing_edges"]) >= 1
    assert ver["params"]["lambda"] == 4
    assert ver["spectrum"]["multiplicities"] == [1, 45, 50]


def test_verify_with_geometry(tmp_path, capsys):
    run_ok(["build", "--h", "2", "--m", "1", "--out", str(tmp_path)])
    capsys.readouterr()
    run_ok(["verify", "--h", "2", "--m", "1", "--in", str(tmp_path / "gamma.g6")])
    ver = json.loads(capsys.readouterr().out)
    assert ver["geometric"] is True and ver["pencil_count"] == 64
    assert ver["hypotheses"]["passed"]


def test_witness(capsys):
    run_ok(["witness", "--h", "2", "--m", "1"])
    rep = json.loads(capsys.readouterr().out)
    assert rep["witness"]["passed"]
    assert rep["witness"]["max_clique_switched"] == 5


def test_spectrum(capsys):
    run_ok(["spectrum", "--h", "2", "--m", "1", "--primes", "97,101"])
    rep = json.loads(capsys.readouterr().out)
    assert rep["cospectral_mod_primes"]
    assert rep["gamma"]["charpoly_mod"]["97"] == rep["gamma_prime"]["charpoly_mod"]["97"]


def test_spectrum_bad_prime():
    assert run(["spectrum", "--h", "2", "--m", "1", "--primes", "89"]) == 2


def test_explore(tmp_path):
    run_ok(["explore", "--h", "2", "--m", "1", "--depth", "1", "--limit", "20", "--out", str(tmp_path)])
    summary = json.loads((tmp_path / "census.json").read_text())
    assert summary["fingerprint_distinct"] >= 2
    assert len(list(tmp_path.glob("*.g6"))) == summary["fingerprint_distinct"]


def test_export(capsys):
    run_ok(["export", "--h", "2", "--m", "1"])
    rep = json.loads(capsys.readouterr().out)
    assert len(rep["lines"]) == 96
    assert rep["lines"][0] == {"id": 0, "dir": [0, 0, 1], "base": [0, 0, 0]}


def test_arc_file(tmp_path, capsys):
    arc = tmp_path / "arc.txt"
    arc.write_text("0 0 1\n0 1 1\n1 0 1\n1 1 3\n1 2 1\n1 3 3\n")
    run_ok(["witness", "--h", "2", "--arc", str(arc), "--alpha", "1"])
    assert json.loads(capsys.readouterr().out)["witness"]["passed"]


def test_arc_without_valid_pair(tmp_path):
    arc = tmp_path / "line.txt"
    arc.write_text("0 0 1\n0 1 0\n0 1 1\n0 1 2\n0 1 3\n")
    assert run(["switch", "--h", "2", "--arc", str(arc), "--alpha", "1"]) == 1


def test_overrides(tmp_path):
    run_ok(["switch", "--h", "2", "--m", "1", "--secant", "2", "--p", "1",
            "--pplane", "1", "3", "--out", str(tmp_path)])
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["config"]["secant_index"] == 2
    assert rep["config"]["M1"]["index"] == 1 and rep["config"]["M2"]["index"] == 3


def test_deterministic_outputs(tmp_path):
    for d in ("a", "b"):
        run_ok(["switch", "--h", "2", "--m", "1", "--out", str(tmp_path / d)])
        run_ok(["explore", "--h", "2", "--m", "1", "--limit", "10", "--out", str(tmp_path / d / "census")])
    for name in ("gamma_prime.g6", "report.json", "census/census.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

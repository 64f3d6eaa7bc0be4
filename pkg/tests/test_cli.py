from __future__ import annotations

import json
import random

import pytest

from mscalg.algebra import Msc, multiply
from mscalg.automorphisms import are_isomorphic, decide_trivial_aut
from mscalg.cli import run
from mscalg.derivations import derivation_report
from mscalg.simplicity import decide_simple

from conftest import GF2, GF3, GF5, Q, random_msc, s0


def _write(tmp_path, name, A):
    path = tmp_path / name
    path.write_text(A.dumps())
    return str(path)


def _call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_spec_examples(tmp_path, capsys):
    f = _write(tmp_path, "s0.json", s0(Q))
    code, out, _ = _call(capsys, "der", "--in", f)
    assert code == 0 and out["trivial"] is True and out["dim"] == 0
    code, out, _ = _call(capsys, "simple", "--in", f)
    assert code == 0 and out["status"] == "NotSimple" and out["certificate"] == [["1", "1"]]
    code, out, _ = _call(capsys, "audit", "--field", "GF2", "--property", "trivder")
    assert code == 0 and out["total_msc"] == 256 and out["complete"] is True


def _golden_inputs():
    rng = random.Random(41)
    out = []
    for i in range(20):
        F = (Q, GF2, GF3, GF5)[i % 4]
        out.append(random_msc(F, 2 + (i % 3 == 0), rng, bound=2))
    return out


def test_golden_set_matches_library(tmp_path, capsys):
    for i, A in enumerate(_golden_inputs()):
        f = _write(tmp_path, f"a{i}.json", A)
        _, out, _ = _call(capsys, "der", "--in", f)
        assert out == derivation_report(A)
        _, out, _ = _call(capsys, "simple", "--in", f)
        assert out == decide_simple(A).to_json()
        if A.F.is_finite and A.n == 2:
            _, out, _ = _call(capsys, "aut", "--in", f)
            assert out == decide_trivial_aut(A).to_json()
            _, out, _ = _call(capsys, "iso", "--in", f, "--in2", f)
            assert out["isomorphic"] is True
        u = ",".join(["1"] * A.n)
        _, out, _ = _call(capsys, "mul", "--in", f, "--u", u, "--v", u)
        assert out["product"] == [A.F.format(x) for x in multiply(A, [1] * A.n, [1] * A.n)]


def test_round_trip_of_emitted_mscs(tmp_path, capsys):
    code, out, _ = _call(capsys, "construct", "--field", "GF5", "--c", "0,0,0,1", "--target-n", "3", "--mode", "SimpleToo")
    assert code == 0
    for stage in out["stages"]:
        A = Msc.loads(json.dumps(stage["msc"]))
        assert A.to_json() == stage["msc"]
    code, out, _ = _call(capsys, "classify", "--field", "GF5", "--property", "TrivDer", "--family", "A_8", "--params", "b1=0")
    assert code == 0 and Msc.loads(json.dumps(out["msc"])) == Msc([[0, 1, 1, 0], [0, 1, 0, 4]], GF5)


def test_out_flag(tmp_path, capsys):
    f = _write(tmp_path, "s0.json", s0(Q))
    dest = tmp_path / "res.json"
    assert run(["der", "--in", f, "--out", str(dest)]) == 0
    assert json.loads(dest.read_text())["dim"] == 0


def test_exit_codes(tmp_path, capsys):
    f = _write(tmp_path, "s0.json", s0(GF5))
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "entries": [["1"]]}')
    assert run([]) == 2
    assert run(["der"]) == 2
    assert run(["der", "--in", str(tmp_path / "missing.json")]) == 2
    assert run(["density", "--field", "GF5", "--samples", "10"]) == 2
    assert run(["density", "--field", "Q", "--samples", "10", "--seed", "1"]) == 2
    assert run(["der", "--in", str(bad)]) == 3
    assert run(["mul", "--in", f, "--u", "1", "--v", "1,0"]) == 3
    assert run(["iso", "--in", f, "--in2", f, "--field", "GF101"]) == 4
    capsys.readouterr()


def test_density_csv(tmp_path, capsys):
    csv_path = tmp_path / "d.csv"
    code, out, _ = _call(capsys, "density", "--field", "GF2,GF3", "--samples", "50", "--seed", "1", "--csv", str(csv_path))
    assert code == 0 and len(out["reports"]) == 2
    assert len(csv_path.read_text().splitlines()) == 3

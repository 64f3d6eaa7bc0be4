from __future__ import annotations

import io

import pytest

from mscalg.classify2d import census
from mscalg.errors import BudgetExceeded, NotFiniteField
from mscalg.experiments import EXHAUSTIVE, density_scan, inclusion_scan, sample_mscs, write_csv

from conftest import GF2, GF3, GF5, Q


def test_gf2_exhaustive_two_routes_agree():
    flags = census(GF2)
    expected = {
        "trivial_der": sum(1 for f in flags if f & 1),
        "trivial_aut": sum(1 for f in flags if f & 2),
        "simple": sum(1 for f in flags if f & 4),
        "star": sum(1 for f in flags if f == 7),
    }
    for engine in ("kernels", "library"):
        rep = density_scan(GF2, 2, EXHAUSTIVE, engine=engine)
        assert rep.total == 256 and rep.counts == expected


def test_determinism_and_worker_independence():
    a = density_scan(GF2, 2, 10, seed=7)
    b = density_scan(GF2, 2, 10, seed=7)
    assert a.to_json() == b.to_json()
    c = density_scan(GF3, 2, 2500, seed=3, workers=1)
    d = density_scan(GF3, 2, 2500, seed=3, workers=2)
    assert c.to_json() == d.to_json()
    assert sample_mscs(2, 5, 1, 0, 5) == sample_mscs(2, 5, 1, 0, 5)


def test_fractions_consistent():
    rep = density_scan(GF3, 2, 3000, seed=11)
    fr = rep.fractions
    assert all(0 <= v <= 1 for v in fr.values())
    assert fr["star"] <= min(fr["trivial_der"], fr["trivial_aut"], fr["simple"])


def test_aut_skipped_over_budget():
    rep = density_scan(GF5, 2, 100, seed=1, aut_budget=100)
    assert rep.counts["trivial_aut"] is None and rep.counts["star"] is None
    assert "aut_note" in rep.to_json()


def test_errors():
    with pytest.raises(NotFiniteField):
        density_scan(Q, 2, 10, seed=1)
    with pytest.raises(ValueError):
        density_scan(GF2, 2, 10)
    with pytest.raises(BudgetExceeded):
        density_scan(GF5, 2, EXHAUSTIVE, budget=1000)


def test_csv():
    reps = [density_scan(GF2, 2, EXHAUSTIVE), density_scan(GF3, 2, 100, seed=2)]
    buf = io.StringIO()
    text = write_csv(reps, buf)
    lines = text.splitlines()
    assert buf.getvalue() == text and lines[0].startswith("p,n,samples")
    assert lines[1].startswith("2,2,exhaustive,,") and len(lines) == 3


def test_inclusion_gf3_exhaustive():
    rep = inclusion_scan(GF3)
    assert rep.total == 6561 and rep.aut_not_der == 0 and rep.der_not_aut == 576
    assert rep.members["DerNotAut"] and rep.all_matched
    for m in rep.members["DerNotAut"]:
        assert m["match"]["family"] in ("A_{3,3}", "A_{7,3}")


def test_inclusion_gf5_sampled():
    rep = inclusion_scan(GF5, 2, 5000, seed=1)
    assert rep.inclusion_holds and rep.der_not_aut > 0

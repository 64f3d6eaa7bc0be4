from __future__ import annotations

import pytest

from mscalg import kernels
from mscalg.algebra import Msc
from mscalg.classify2d import (
    CharClass,
    Eq,
    NoRoot,
    NoSolution,
    Property,
    audit_completeness,
    census,
    enumerate_instances,
    instantiate,
    lookup,
    table,
)
from mscalg.errors import CharMismatch, ConstraintViolated, NotFiniteField
from mscalg.field import FieldSpec

from conftest import GF2, GF3, GF5, Q

GF7 = FieldSpec.from_name("GF7")


def test_table_examples():
    ids = [f.id for f in table(GF5, "TrivDer")]
    assert ids == ["A_1", "A_2", "A_3", "A_4", "A_6", "A_7", "A_8", "A_10", "A_11", "A_12"]
    simple2 = table(GF2, Property.SIMPLE)
    assert simple2[-1].id == "A_{11,2}" and len(simple2) == 10
    assert [f.id for f in table(GF3, "AutNotDer")] == ["A_{9,3}", "A_{10,3}"]
    assert table(Q, "AutNotDer") == []


def test_char_class():
    assert CharClass.of(GF2) is CharClass.TWO
    assert CharClass.of(GF3) is CharClass.THREE
    assert CharClass.of(Q) is CharClass.of(GF7) is CharClass.NOT_TWO_THREE


def test_instantiate_examples():
    assert instantiate(lookup("A_8", GF5, "TrivDer"), {"b1": 0}, GF5) == Msc([[0, 1, 1, 0], [0, 1, 0, 4]], GF5)
    fam = lookup("A_11", Q, "TrivDer")
    assert instantiate(fam, {"b1": 2}, Q) == Msc([[0, 0, 0, 1], [2, 0, 0, 0]], Q)
    with pytest.raises(ConstraintViolated, match="b1 - t"):
        instantiate(fam, {"b1": 8}, Q)
    with pytest.raises(CharMismatch):
        instantiate(fam, {"b1": 2}, GF2)


def test_enumerate_examples():
    assert len(list(enumerate_instances(lookup("A_8", GF5, "TrivDer"), GF2))) == 2
    assert list(enumerate_instances(lookup("A_11", GF5, "TrivDer"), GF2)) == []
    fam = lookup("A_{1,2}", GF2, "Simple")
    for env, _ in enumerate_instances(fam, GF2, with_values=True):
        assert env["a4"] != env["a1"] or env["b1"] != env["a2"]
    with pytest.raises(NotFiniteField):
        list(enumerate_instances(fam, Q))


def test_predicates():
    assert NoRoot("b1 - t**3").holds(Q, {"b1": 2})
    assert not NoRoot("b1 - t**3").holds(Q, {"b1": 8})
    assert Eq("a1 - 1/2").holds(GF5, {"a1": 3})
    # char 3: t^2+t+1 has the root 1, but there is still no cube root of unity besides 1
    assert NoSolution("d**3 - 1", "d - 1").holds(GF3, {})
    assert not NoSolution("d**3 - 1", "d - 1").holds(GF7, {})
    assert NoRoot("b1 - t**3").to_json()["kind"] == "NoRoot"


@pytest.mark.parametrize("F", [GF5, GF7], ids=str)
@pytest.mark.parametrize("prop,bit", [("TrivDer", 1), ("TrivAut", 2)])
def test_generic_tables_sound_on_small_fields(F, prop, bit):
    for fam in table(F, prop):
        ms = [tuple(int(x) for x in A.flat()) for A in enumerate_instances(fam, F)]
        flags = kernels.classify(ms, 2, F.p, check_aut=bit == 2)
        assert all(f & bit for f in flags), fam.id


def test_census_counts():
    flags = census(GF2)
    assert len(flags) == 256
    assert sum(f & 1 for f in flags) == 156
    assert sum(1 for f in flags if f & 2) == 210
    assert sum(1 for f in flags if f & 4) == 171


def test_audit_gf2_trivaut_report_shape():
    rep = audit_completeness(GF2, "trivaut")
    assert rep.total_msc == 256 and rep.holding == 210
    assert rep.sound and rep.complete
    js = rep.to_json()
    assert js["property"] == "TrivAut" and js["field"] == GF2.to_json()

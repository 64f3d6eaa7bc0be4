from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mscalg.errors import ZeroInverse
from mscalg.field import FieldSpec, Poly, invert, roots_in_field, sample_scalar

from conftest import FIELDS, GF2, GF5, Q

primes = st.sampled_from([2, 3, 5, 7, 11, 13, 101])


def test_invert_examples():
    assert invert(1, Q) == 1
    assert invert(2, GF5) == 3
    assert invert(Fraction(-2, 3), Q) == Fraction(-3, 2)


def test_invert_zero_raises():
    with pytest.raises(ZeroInverse):
        invert(0, GF5)
    with pytest.raises(ZeroInverse):
        invert(0, Q)


def test_roots_examples():
    assert roots_in_field(Poly([1, 1, 1], GF2)) == []
    assert roots_in_field(Poly([1, 1, 1], FieldSpec.GF(7))) == [2, 4]
    assert roots_in_field(Poly([2, 0, 0, -1], Q)) == []
    assert roots_in_field(Poly([-1, 0, 1], Q)) == [-1, 1]


def test_sample_scalar_contracts():
    a = [sample_scalar(GF2, random.Random(3)) for _ in range(5)]
    b = [sample_scalar(GF2, random.Random(3)) for _ in range(5)]
    assert a == b and set(a) <= {0, 1}
    rng = random.Random(1)
    assert all(0 <= sample_scalar(GF5, rng) < 5 for _ in range(100))
    vals = [sample_scalar(Q, rng, 3) for _ in range(200)]
    assert all(v.denominator == 1 and -3 <= v <= 3 for v in vals)


@given(primes, st.integers(), st.integers(), st.integers())
def test_field_axioms_gfp(p, x, y, z):
    F = FieldSpec.GF(p)
    a, b, c = F(x), F(y), F(z)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a != 0:
        assert F.mul(a, invert(a, F)) == 1


@given(st.fractions(), st.fractions(), st.fractions())
def test_field_axioms_q(a, b, c):
    assert Q.mul(Q.add(a, b), c) == Q.add(Q.mul(a, c), Q.mul(b, c))
    if a != 0:
        assert Q.mul(a, invert(a, Q)) == 1


@given(primes, st.lists(st.integers(-50, 50), min_size=1, max_size=7))
def test_roots_match_bruteforce(p, coeffs):
    F = FieldSpec.GF(p)
    f = Poly(coeffs, F)
    if f.is_zero():
        return
    assert roots_in_field(f) == [t for t in F.elements() if f(t) == 0]


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_rational_roots_of_monic_cubics(a, b, c):
    f = Poly([c, b, a, 1], Q)
    roots = roots_in_field(f)
    assert all(f(r) == 0 for r in roots)
    # monic integer cubic: rational roots are integer divisors of c
    if c == 0:
        expected = sorted({Fraction(0)} | set(roots_in_field(Poly([b, a, 1], Q))))
    else:
        cands = {d * s for d in range(1, abs(c) + 1) if c % d == 0 for s in (1, -1)}
        expected = sorted(Fraction(t) for t in cands if f(t) == 0)
    assert roots == expected


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_json_round_trip(F):
    assert FieldSpec.from_json(F.to_json()) == F
    assert FieldSpec.from_name(str(F)) == F

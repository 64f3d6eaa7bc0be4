from __future__ import annotations

import random

import pytest

from mscalg.algebra import Msc, Side, basis_vector, change_basis, multiply, side_operator, trace_vector
from mscalg.automorphisms import enumerate_automorphisms
from mscalg.errors import DimensionMismatch, SingularBasisChange, ValidationError
from mscalg.linalg import Mat

from conftest import FIELDS, GF2, GF3, Q, e2, random_invertible, random_msc, s0


def test_multiply_examples():
    E2, S0 = e2(Q), s0(Q)
    e1, e2v = basis_vector(2, 0, Q), basis_vector(2, 1, Q)
    assert multiply(E2, e1, e1) == e1
    assert multiply(E2, e1, e2v) == (0, 0)
    assert multiply(S0, e2v, e1) == (1, 1)


def test_change_basis_examples(rng):
    A = s0(Q)
    assert change_basis(A, Mat.identity(2, Q)) == A
    swap = Mat([[0, 1], [1, 0]], GF2)
    assert change_basis(e2(GF2), swap) == e2(GF2)
    for _ in range(20):
        g = random_invertible(Q, 2, rng)
        assert change_basis(change_basis(A, g), g.inverse()) == A


def test_change_basis_rejects_singular():
    with pytest.raises(SingularBasisChange):
        change_basis(s0(Q), Mat([[1, 1], [1, 1]], Q))


def test_side_operator_examples():
    assert side_operator(e2(Q), 1, "Left") == Mat([[1, 0], [0, 0]], Q)
    assert side_operator(s0(Q), 2, Side.LEFT) == Mat([[1, 0], [1, 0]], Q)
    R1 = side_operator(s0(Q), 1, "Right")
    assert R1 == Mat([[0, 1], [0, 1]], Q)
    for k in range(2):
        assert R1.column(k) == multiply(s0(Q), basis_vector(2, k, Q), basis_vector(2, 0, Q))


def test_trace_vector_examples():
    assert trace_vector(e2(Q)) == [1, 1]
    assert trace_vector(s0(Q)) == [0, 1]
    assert trace_vector(Msc.zero(3, Q)) == [0, 0, 0]


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_algebra_properties(F):
    rng = random.Random(11)
    for _ in range(30):
        n = rng.choice([2, 3])
        A = random_msc(F, n, rng)
        u, u2, v = (random_msc(F, 1, rng).flat()[:1] * n for _ in range(3))
        u = tuple(F(rng.randint(-3, 3)) for _ in range(n))
        u2 = tuple(F(rng.randint(-3, 3)) for _ in range(n))
        v = tuple(F(rng.randint(-3, 3)) for _ in range(n))
        a = F(rng.randint(-3, 3))
        lhs = multiply(A, [F.add(F.mul(a, x), y) for x, y in zip(u, u2)], v)
        rhs = tuple(F.add(F.mul(a, x), y) for x, y in zip(multiply(A, u, v), multiply(A, u2, v)))
        assert lhs == rhs
        for i in range(n):
            for j in range(n):
                col = tuple(A.entry(k, i, j) for k in range(n))
                assert multiply(A, basis_vector(n, i, F), basis_vector(n, j, F)) == col
            assert side_operator(A, i + 1, "left").apply(v) == multiply(A, basis_vector(n, i, F), v)
            assert side_operator(A, i + 1, "right").apply(v) == multiply(A, v, basis_vector(n, i, F))
        g, h = random_invertible(F, n, rng), random_invertible(F, n, rng)
        assert change_basis(change_basis(A, g), h) == change_basis(A, h @ g)


@pytest.mark.parametrize("F", [GF2, GF3], ids=str)
def test_trace_relation_for_automorphisms(F):
    rng = random.Random(13)
    for _ in range(40):
        A = random_msc(F, 2, rng)
        tr = trace_vector(A)
        for g in enumerate_automorphisms(A):
            for i in range(2):
                assert tr[i] == F.add(F.mul(tr[0], g[0, i]), F.mul(tr[1], g[1, i]))


def test_json_round_trip_and_validation(rng):
    for F in FIELDS:
        A = random_msc(F, 3, rng)
        assert Msc.loads(A.dumps()) == A
    with pytest.raises(ValidationError):
        Msc.loads('{"n": 2, "entries": [["1", "2"]]}')
    with pytest.raises(ValidationError):
        Msc.loads("not json")
    with pytest.raises(DimensionMismatch):
        multiply(s0(Q), [1, 0, 0], [1, 0])

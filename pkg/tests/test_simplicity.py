from __future__ import annotations

import random

import pytest

from mscalg import kernels
from mscalg.algebra import Msc, change_basis, operator_system
from mscalg.linalg import Subspace
from mscalg.simplicity import SimpleMethod, SimpleStatus, closure, decide_simple, is_invariant

from conftest import FIELDS, GF2, GF3, GF5, Q, e2, random_invertible, random_msc, s0, s1

EIG, SCAN = SimpleMethod.EIGENLINE_SEARCH, SimpleMethod.PROJECTIVE_SCAN


def test_closure_examples():
    assert closure(s0(Q), [0, 0]).is_zero()
    assert closure(s1(Q), [1, 0]).is_full()
    assert closure(s0(Q), [1, 1]) == Subspace(2, [[1, 1]], Q)


def test_decide_examples():
    v = decide_simple(Msc.zero(2, Q))
    assert v.status is SimpleStatus.NOT_SIMPLE and v.certificate.dim == 1
    assert decide_simple(s1(Q)).status is SimpleStatus.SIMPLE
    assert decide_simple(s1(GF2)).status is SimpleStatus.SIMPLE
    v = decide_simple(s0(Q))
    assert v.status is SimpleStatus.NOT_SIMPLE and v.certificate == Subspace(2, [[1, 1]], Q)
    v = decide_simple(e2(Q))
    assert v.status is SimpleStatus.NOT_SIMPLE and is_invariant(v.certificate, operator_system(e2(Q)))


def test_one_dimensional_case_is_flagged():
    v = decide_simple(Msc.zero(1, Q))
    assert v.status is SimpleStatus.SIMPLE and "n=1" in v.note


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_certificates_and_invariance(F):
    rng = random.Random(29)
    for _ in range(60):
        n = rng.choice([2, 3])
        A = random_msc(F, n, rng, bound=1)
        v = decide_simple(A)
        if v.status is SimpleStatus.NOT_SIMPLE:
            W = v.certificate
            assert 0 < W.dim < n and is_invariant(W, operator_system(A))
            assert closure(A, W.basis[0]).dim <= W.dim
        g = random_invertible(F, n, rng)
        assert decide_simple(change_basis(A, g)).status is v.status


@pytest.mark.parametrize("F", [GF2, GF3], ids=str)
def test_methods_agree_exhaustively(F):
    p = F.p
    for code in range(p**8):
        A = Msc.from_flat(kernels.decode(code, 8, p), 2, F)
        assert decide_simple(A, EIG).status is decide_simple(A, SCAN).status

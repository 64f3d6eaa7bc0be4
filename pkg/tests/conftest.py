from __future__ import annotations

import random

import pytest
from hypothesis import settings

from mscalg.algebra import Msc
from mscalg.field import FieldSpec
from mscalg.linalg import Mat

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Q = FieldSpec.Q()
GF2, GF3, GF5 = FieldSpec.GF(2), FieldSpec.GF(3), FieldSpec.GF(5)
FIELDS = [Q, GF2, GF3, GF5]


def e2(F: FieldSpec) -> Msc:
    return Msc([[1, 0, 0, 0], [0, 0, 0, 1]], F)


def s0(F: FieldSpec) -> Msc:
    return Msc([[0, 0, 1, 0], [0, 0, 1, 0]], F)


def s1(F: FieldSpec) -> Msc:
    return Msc([[0, 0, 1, 0], [1, 0, 1, 0]], F)


def random_msc(F: FieldSpec, n: int, rng: random.Random, bound: int = 3) -> Msc:
    pick = (lambda: rng.randrange(F.p)) if F.is_finite else (lambda: rng.randint(-bound, bound))
    return Msc([[pick() for _ in range(n * n)] for _ in range(n)], F)


def random_invertible(F: FieldSpec, n: int, rng: random.Random) -> Mat:
    while True:
        pick = (lambda: rng.randrange(F.p)) if F.is_finite else (lambda: rng.randint(-3, 3))
        g = Mat([[pick() for _ in range(n)] for _ in range(n)], F)
        if g.det() != 0:
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240101)

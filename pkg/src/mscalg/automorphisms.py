"""Automorphisms and isomorphisms.

``g`` is an automorphism iff ``det g != 0`` and ``g A = A (g ⊗ g)``.  Over
GF(p) the group is found by scanning GL(n, p) lexicographically; over Q (or
when the scan is over budget) only witnesses can be produced, and triviality
stays ``UNKNOWN``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .algebra import Msc, change_basis, trace_vector
from .errors import BudgetExceeded, DimensionMismatch, NotFiniteField
from .linalg import Mat, gl_order, kronecker

DEFAULT_BUDGET = 10**7


class AutStatus(enum.Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "NonTrivial"
    UNKNOWN = "Unknown"


class AutMethod(enum.Enum):
    EXHAUSTIVE = "Exhaustive"
    WITNESS_ONLY = "WitnessOnly"


@dataclass(frozen=True)
class AutVerdict:
    status: AutStatus
    method: AutMethod
    witness: Mat | None = None
    order: int | None = None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "order": self.order,
            "witness": self.witness.to_strings() if self.witness is not None else None,
            "method": self.method.value,
        }


def _check(A: Msc, g: Mat):
    if g.F != A.F or g.shape != (A.n, A.n):
        raise DimensionMismatch(f"expected an {A.n}x{A.n} map over {A.F}")


def is_automorphism(A: Msc, g: Mat) -> bool:
    _check(A, g)
    if g.det() == 0:
        return False
    return g @ A.mat == A.mat @ kronecker(g, g)


def _intertwines(A: Msc, B: Msc, g: Mat) -> bool:
    """``g A == B (g ⊗ g)`` entry by entry, stopping at the first mismatch."""
    F, n = A.F, A.n
    gr = g.rows
    for i in range(n):
        gi = [gr[r][i] for r in range(n)]
        for j in range(n):
            gj = [gr[s][j] for s in range(n)]
            for k in range(n):
                lhs = F.reduce(sum(gr[k][m] * A.entry(m, i, j) for m in range(n)))
                rhs = F.reduce(
                    sum(B.entry(k, r, s) * gi[r] * gj[s] for r in range(n) if gi[r] for s in range(n))
                )
                if lhs != rhs:
                    return False
    return True


def _require_scan(A: Msc, budget: int) -> int:
    if not A.F.is_finite:
        raise NotFiniteField("exhaustive automorphism search needs GF(p)")
    size = gl_order(A.n, A.F.p)
    if size > budget:
        raise BudgetExceeded(size, budget, "elements of GL")
    return size


def _to_mats(flats, A: Msc) -> list[Mat]:
    return [Mat.from_flat(g, A.n, A.n, A.F) for g in flats]


def enumerate_automorphisms(A: Msc, budget: int = DEFAULT_BUDGET) -> list[Mat]:
    """Every automorphism of ``A`` over GF(p), in lexicographic order of entries."""
    _require_scan(A, budget)
    a = A.flat()
    return _to_mats(kernels.scan_isomorphisms(a, a, A.n, A.F.p), A)


def automorphism_count(A: Msc, budget: int = DEFAULT_BUDGET) -> int:
    _require_scan(A, budget)
    a = A.flat()
    return len(kernels.scan_isomorphisms(a, a, A.n, A.F.p))


def has_trivial_aut_exhaustive(A: Msc, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the identity is the only automorphism (GF(p) scan)."""
    return automorphism_count(A, budget) == 1


_SMALL = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3, Fraction(1, 3), Fraction(-1, 3))


def _heuristic_candidates(A: Msc):
    """Monomial maps first, then {-1,0,1} maps obeying the trace relation ``g^T t = t``."""
    n, F = A.n, A.F
    I = Mat.identity(n, F)
    scalars = []
    for x in _SMALL:
        if F.is_finite and Fraction(x).denominator % F.p == 0:
            continue
        v = F(x)
        if v != 0 and v not in scalars:
            scalars.append(v)
    for perm in itertools.permutations(range(n)):
        for lams in itertools.product(scalars, repeat=n):
            rows = [[F.zero] * n for _ in range(n)]
            for i, (pi, lam) in enumerate(zip(perm, lams)):
                rows[pi][i] = lam
            g = Mat(rows, F)
            if g != I:
                yield g
    if n > 3:
        return
    t = trace_vector(A)
    entries = [F(0), F(1), F(-1)]
    for flat in itertools.product(entries, repeat=n * n):
        # column i of g must satisfy sum_j t_j g_ji = t_i
        if all(F.reduce(sum(t[j] * flat[j * n + i] for j in range(n))) == t[i] for i in range(n)):
            g = Mat.from_flat(flat, n, n, F)
            if g != I and not _is_monomial(g):
                yield g


def _is_monomial(g: Mat) -> bool:
    return all(sum(1 for x in r if x != 0) == 1 for r in g.rows) and all(
        sum(1 for x in c if x != 0) == 1 for c in g.columns()
    )


def find_witness(A: Msc, max_candidates: int = 50_000) -> Mat | None:
    """Bounded search for a non-identity automorphism (any field)."""
    for count, g in enumerate(_heuristic_candidates(A)):
        if count >= max_candidates:
            break
        if _intertwines(A, A, g) and g.det() != 0:
            return g
    return None


def decide_trivial_aut(A: Msc, budget: int = DEFAULT_BUDGET) -> AutVerdict:
    if A.F.is_finite and gl_order(A.n, A.F.p) <= budget:
        auts = enumerate_automorphisms(A, budget)
        if len(auts) == 1:
            return AutVerdict(AutStatus.TRIVIAL, AutMethod.EXHAUSTIVE, order=1)
        I = Mat.identity(A.n, A.F)
        witness = next(g for g in auts if g != I)
        return AutVerdict(AutStatus.NONTRIVIAL, AutMethod.EXHAUSTIVE, witness, order=len(auts))
    g = find_witness(A)
    if g is not None:
        return AutVerdict(AutStatus.NONTRIVIAL, AutMethod.WITNESS_ONLY, g)
    return AutVerdict(AutStatus.UNKNOWN, AutMethod.WITNESS_ONLY)


def are_isomorphic(A: Msc, B: Msc, budget: int = DEFAULT_BUDGET) -> Mat | None:
    """Some ``g`` with ``change_basis(A, g) == B``, or None if there is none."""
    if A.n != B.n or A.F != B.F:
        raise DimensionMismatch("algebras of different dimension or field")
    _require_scan(A, budget)
    found = kernels.scan_isomorphisms(A.flat(), B.flat(), A.n, A.F.p, True)
    if not found:
        return None
    g = Mat.from_flat(found[0], A.n, A.n, A.F)
    assert change_basis(A, g) == B
    return g

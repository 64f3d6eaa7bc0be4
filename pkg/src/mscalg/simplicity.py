"""Simplicity through invariant subspaces of the multiplication operators.

An algebra is simple iff the system ``(A_1..A_n, A^o_1..A^o_n)`` of left and
right multiplication operators has no invariant subspace other than ``0``
and ``F^n``.  Three deciders are provided:

* ``PROJECTIVE_SCAN`` (GF(p)): close every line; complete.
* ``EIGENLINE_SEARCH`` (any field, n <= 3): common eigenlines of the system
  give the 1-dimensional invariant subspaces, common eigenlines of the
  transposed system give the hyperplanes; complete for n <= 3.
* ``CANDIDATE_CLOSURES`` (fallback): closures of ``e_i`` and ``e_i + e_j``;
  can only prove non-simplicity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .algebra import Msc, basis_vector, operator_system
from .field import FieldSpec, Poly, roots_in_field
from .linalg import Mat, Subspace, kernel_basis

DEFAULT_BUDGET = 10**7


class SimpleStatus(enum.Enum):
    SIMPLE = "Simple"
    NOT_SIMPLE = "NotSimple"
    UNKNOWN = "Unknown"


class SimpleMethod(enum.Enum):
    PROJECTIVE_SCAN = "ProjectiveScan"
    EIGENLINE_SEARCH = "EigenlineSearch"
    CANDIDATE_CLOSURES = "CandidateClosures"


@dataclass(frozen=True)
class SimplicityVerdict:
    status: SimpleStatus
    method: SimpleMethod
    certificate: Subspace | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out = {
            "status": self.status.value,
            "certificate": self.certificate.to_strings() if self.certificate is not None else None,
            "method": self.method.value,
        }
        if self.note:
            out["note"] = self.note
        return out


def closure(A: Msc, v: Sequence) -> Subspace:
    """Smallest subspace containing ``v`` and stable under every multiplication operator."""
    ops = operator_system(A)
    W = Subspace(A.n, [v], A.F)
    while True:
        grown = Subspace(A.n, list(W.basis) + [T.apply(b) for b in W.basis for T in ops], A.F)
        if grown.dim == W.dim:
            return W
        W = grown


def is_invariant(W: Subspace, ops: Sequence[Mat]) -> bool:
    return all(W.is_invariant(T) for T in ops)


def charpoly(T: Mat) -> Poly:
    """``det(t I - T)`` for ``n <= 3``."""
    F, n = T.F, T.nrows
    tr = T.trace()
    if n == 1:
        return Poly([F.neg(T[0, 0]), 1], F)
    if n == 2:
        return Poly([T.det(), F.neg(tr), 1], F)
    if n == 3:
        c2 = F.zero
        for i in range(3):
            for j in range(i + 1, 3):
                c2 = F.add(c2, F.sub(F.mul(T[i, i], T[j, j]), F.mul(T[i, j], T[j, i])))
        return Poly([F.neg(T.det()), c2, F.neg(tr), 1], F)
    raise ValueError("characteristic polynomial only implemented for n <= 3")


def _is_eigenvector(T: Mat, v) -> bool:
    w = T.apply(v)
    F = T.F
    # v and w dependent: all 2x2 minors vanish
    n = len(v)
    return all(F.sub(F.mul(v[r], w[s]), F.mul(v[s], w[r])) == 0 for r in range(n) for s in range(r + 1, n))


def _lines_in_plane(ops: Sequence[Mat], b1, b2, F: FieldSpec):
    """Candidate common eigenlines inside ``span(b1, b2)``.

    Yields a finite candidate list, or ``[b1]`` when every line of the plane
    satisfies all eigen-conditions.
    """
    n = len(b1)
    for T in ops:
        t1, t2 = T.apply(b1), T.apply(b2)
        for r in range(n):
            for s in range(r + 1, n):
                # minor of [x b1 + y b2, x t1 + y t2] at rows (r, s), as alpha x^2 + beta x y + gamma y^2
                alpha = F.sub(F.mul(b1[r], t1[s]), F.mul(b1[s], t1[r]))
                gamma = F.sub(F.mul(b2[r], t2[s]), F.mul(b2[s], t2[r]))
                beta = F.reduce(b1[r] * t2[s] - b1[s] * t2[r] + b2[r] * t1[s] - b2[s] * t1[r])
                if alpha == 0 and beta == 0 and gamma == 0:
                    continue
                points = []
                if gamma == 0:
                    points.append(b2)
                for y in roots_in_field(Poly([alpha, beta, gamma], F)):
                    points.append(tuple(F.add(x1, F.mul(y, x2)) for x1, x2 in zip(b1, b2)))
                return points
    return [b1]


def common_eigenline(ops: Sequence[Mat], n: int, F: FieldSpec):
    """A vector spanning a line invariant under every operator, or None (n <= 3)."""
    I = Mat.identity(n, F)
    T = next((op for op in ops if not op.is_scalar()), None)
    if T is None:
        return basis_vector(n, 0, F)
    for lam in roots_in_field(charpoly(T)):
        E = kernel_basis(T - I.scale(lam))
        if E.dim == 1:
            candidates = [E.basis[0]]
        elif E.dim == 2:
            candidates = _lines_in_plane(ops, E.basis[0], E.basis[1], F)
        else:
            raise ValueError("eigenspace too large for the n <= 3 search")
        for v in candidates:
            if all(_is_eigenvector(op, v) for op in ops):
                return v
    return None


def _eigenline_search(A: Msc) -> Subspace | None:
    n, F = A.n, A.F
    ops = operator_system(A)
    v = common_eigenline(ops, n, F)
    if v is not None:
        return Subspace(n, [v], F)
    if n >= 3:
        phi = common_eigenline([T.T for T in ops], n, F)
        if phi is not None:
            return kernel_basis(Mat([phi], F))
    return None


def _candidate_closures(A: Msc) -> Subspace | None:
    n, F = A.n, A.F
    cands = [basis_vector(n, i, F) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cands.append(tuple(F.add(x, y) for x, y in zip(cands[i], cands[j])))
    for v in cands:
        W = closure(A, v)
        if not W.is_full():
            return W
    return None


def projective_count(n: int, p: int) -> int:
    return (p**n - 1) // (p - 1)


def default_method(A: Msc, budget: int = DEFAULT_BUDGET) -> SimpleMethod:
    if A.F.is_finite and projective_count(A.n, A.F.p) <= budget:
        return SimpleMethod.PROJECTIVE_SCAN
    if A.n <= 3:
        return SimpleMethod.EIGENLINE_SEARCH
    return SimpleMethod.CANDIDATE_CLOSURES


def decide_simple(A: Msc, method: SimpleMethod | None = None, budget: int = DEFAULT_BUDGET) -> SimplicityVerdict:
    method = method or default_method(A, budget)
    n = A.n
    if n == 1:
        # only 0 and F^1 exist, so the criterion reads "simple" even for the zero product
        note = "n=1: only trivial subspaces exist; simple by the invariant-subspace criterion"
        if A.is_zero():
            note += " (zero product)"
        return SimplicityVerdict(SimpleStatus.SIMPLE, method, None, note)

    if method is SimpleMethod.PROJECTIVE_SCAN:
        if not A.F.is_finite:
            raise ValueError("projective scan needs a finite field")
        v = kernels.proper_closure_line(A.flat(), n, A.F.p)
        W = closure(A, v) if v is not None else None
    elif method is SimpleMethod.EIGENLINE_SEARCH:
        W = _eigenline_search(A)
    else:
        W = _candidate_closures(A)

    if W is not None:
        assert 0 < W.dim < n and is_invariant(W, operator_system(A)), "unsound certificate"
        return SimplicityVerdict(SimpleStatus.NOT_SIMPLE, method, W)
    if method is SimpleMethod.CANDIDATE_CLOSURES:
        return SimplicityVerdict(SimpleStatus.UNKNOWN, method)
    return SimplicityVerdict(SimpleStatus.SIMPLE, method)


def is_simple(A: Msc) -> bool:
    """Boolean shortcut; raises if the default decider cannot conclude."""
    v = decide_simple(A)
    if v.status is SimpleStatus.UNKNOWN:
        raise ValueError("simplicity undecided for this algebra")
    return v.status is SimpleStatus.SIMPLE

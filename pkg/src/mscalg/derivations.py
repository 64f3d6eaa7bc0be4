"""Derivation spaces as kernels of the linearized Leibniz system.

``D`` is a derivation iff ``D A = A (D ⊗ I + I ⊗ D)``.  Writing ``D`` row-major
(``d_km`` in slot ``k*n + m``) and ordering equations by ``(k, i, j)``, the
identity becomes ``M(A) vec(D) = 0`` where row ``(k, i, j)`` reads::

    sum_m d_km a^m_ij - sum_m a^k_mj d_mi - sum_l a^k_il d_lj = 0
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .algebra import Msc
from .errors import DimensionMismatch
from .linalg import Mat, kernel_basis, kronecker


@dataclass(frozen=True)
class DerivationSystem:
    base: Msc
    m: Mat

    @property
    def rank(self) -> int:
        return self.m.rank()


def derivation_system(A: Msc) -> DerivationSystem:
    """Assemble the ``n**3 x n**2`` matrix ``M(A)``."""
    n, F = A.n, A.F
    nn = n * n
    rows = []
    for k in range(n):
        for i in range(n):
            for j in range(n):
                row = [F.zero] * nn
                for m in range(n):
                    row[k * n + m] = F.add(row[k * n + m], A.entry(m, i, j))
                    row[m * n + i] = F.sub(row[m * n + i], A.entry(k, m, j))
                    row[m * n + j] = F.sub(row[m * n + j], A.entry(k, i, m))
                rows.append(tuple(row))
    return DerivationSystem(A, Mat._raw(tuple(rows), F, nn))


def unflatten(vec, n: int, F) -> Mat:
    return Mat.from_flat(vec, n, n, F)


def derivation_basis(A: Msc) -> list[Mat]:
    """Basis of Der(A), each element checked with :func:`is_derivation`."""
    basis = [unflatten(v, A.n, A.F) for v in kernel_basis(derivation_system(A).m).basis]
    for D in basis:
        assert is_derivation(A, D), "kernel element failed the direct Leibniz check"
    return basis


def is_derivation(A: Msc, D: Mat) -> bool:
    """Direct check of ``D A == A (D ⊗ I + I ⊗ D)``, independent of ``M(A)``."""
    if D.F != A.F or D.shape != (A.n, A.n):
        raise DimensionMismatch(f"expected an {A.n}x{A.n} map over {A.F}")
    I = Mat.identity(A.n, A.F)
    return D @ A.mat == A.mat @ (kronecker(D, I) + kronecker(I, D))


def derivation_rank(A: Msc) -> int:
    """``rank M(A)``; uses the GF(p) kernel when available."""
    if A.F.is_finite:
        return kernels.derivation_rank(A.flat(), A.n, A.F.p)
    return derivation_system(A).rank


def is_trivial_der(A: Msc) -> bool:
    """``Der(A) == {0}``, i.e. ``rank M(A) == n**2``."""
    return derivation_rank(A) == A.n * A.n


def derivation_report(A: Msc) -> dict:
    basis = derivation_basis(A)
    return {
        "trivial": not basis,
        "dim": len(basis),
        "basis": [D.to_strings() for D in basis],
        "rank_MA": derivation_system(A).rank,
    }

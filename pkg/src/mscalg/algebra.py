"""Algebras as matrices of structure constants (MSC).

An ``n``-dimensional algebra over ``F`` is stored as the ``n x n**2`` matrix
``A`` with ``e_i e_j = sum_k a_ij^k e_k``.  Row ``k`` and column
``(i - 1) * n + j`` (1-based) hold ``a_ij^k``; in 0-based code that is
``A[k, i * n + j]``.  The basis is always the standard basis of ``F^n``.
"""

from __future__ import annotations

import enum
import json
from typing import Sequence

from .errors import DimensionMismatch, IndexOutOfRange, SingularBasisChange, ValidationError
from .field import FieldSpec, Scalar
from .linalg import Mat, Vec, kron_vec, kronecker


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Msc:
    """Immutable MSC of an ``n``-dimensional algebra."""

    __slots__ = ("n", "F", "mat", "_ops")

    def __init__(self, entries: Mat | Sequence[Sequence], F: FieldSpec | None = None):
        if isinstance(entries, Mat):
            mat = entries
        else:
            if F is None:
                raise ValueError("a field is required for raw entries")
            mat = Mat(entries, F)
        n = mat.nrows
        if mat.ncols != n * n:
            raise DimensionMismatch(f"an MSC with {n} rows needs {n * n} columns, got {mat.ncols}")
        self.n = n
        self.F = mat.F
        self.mat = mat
        self._ops = None

    @classmethod
    def from_blocks(cls, blocks: Sequence[Mat]) -> Msc:
        """Assemble ``(A_1 | A_2 | ... | A_n)`` from the left operators."""
        n = len(blocks)
        if any(b.shape != (n, n) for b in blocks):
            raise DimensionMismatch("need n blocks of size n x n")
        rows = [tuple(x for b in blocks for x in b.rows[k]) for k in range(n)]
        return cls(Mat._raw(tuple(rows), blocks[0].F, n * n))

    @classmethod
    def from_flat(cls, flat: Sequence, n: int, F: FieldSpec) -> Msc:
        return cls(Mat.from_flat(flat, n, n * n, F))

    @classmethod
    def zero(cls, n: int, F: FieldSpec) -> Msc:
        return cls(Mat.zeros(n, n * n, F))

    @classmethod
    def diagonal_idempotent(cls, n: int, F: FieldSpec) -> Msc:
        """``e_i e_i = e_i`` and ``e_i e_j = 0`` otherwise."""
        rows = [[1 if c == k * n + k else 0 for c in range(n * n)] for k in range(n)]
        return cls(rows, F)

    # -- accessors -----------------------------------------------------------

    def entry(self, k: int, i: int, j: int) -> Scalar:
        """``a_ij^k`` with 0-based indices."""
        return self.mat.rows[k][i * self.n + j]

    def flat(self) -> tuple:
        return self.mat.flat()

    def block(self, i: int) -> Mat:
        """Left operator ``A_i`` (0-based), i.e. the ``i``-th ``n x n`` block."""
        return side_operator(self, i + 1, Side.LEFT)

    def blocks(self) -> list[Mat]:
        return [self.block(i) for i in range(self.n)]

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, Msc) and self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.mat)

    def __repr__(self) -> str:
        return f"Msc({self.mat.to_strings()}, {self.F})"

    # -- json ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "field": self.F.to_json(), "entries": self.mat.to_strings()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj, field_override: FieldSpec | None = None) -> Msc:
        if not isinstance(obj, dict):
            raise ValidationError("MSC JSON must be an object")
        try:
            n = obj["n"]
            entries = obj["entries"]
        except KeyError as exc:
            raise ValidationError(f"MSC JSON lacks {exc.args[0]!r}") from exc
        F = field_override or FieldSpec.from_json(obj.get("field"))
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValidationError(f"bad dimension {n!r}")
        if not isinstance(entries, list) or len(entries) != n:
            raise ValidationError(f"entries must be a list of {n} rows")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != n * n:
                raise ValidationError(f"each row must hold {n * n} scalars")
            if not all(isinstance(x, (str, int)) and not isinstance(x, bool) for x in row):
                raise ValidationError("scalars must be strings or integers")
            rows.append([F.parse(x) if isinstance(x, str) else F(x) for x in row])
        return cls(rows, F)

    @classmethod
    def loads(cls, text: str, field_override: FieldSpec | None = None) -> Msc:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from exc
        return cls.from_json(obj, field_override)


def _check_vec(A: Msc, v: Sequence) -> Vec:
    if len(v) != A.n:
        raise DimensionMismatch(f"vector of length {len(v)} for a {A.n}-dimensional algebra")
    return tuple(A.F(x) for x in v)


def basis_vector(n: int, i: int, F: FieldSpec) -> Vec:
    """``e_i`` with 0-based ``i``."""
    return tuple(F.one if k == i else F.zero for k in range(n))


def multiply(A: Msc, u: Sequence, v: Sequence) -> Vec:
    """Coordinates of ``u v``, i.e. ``A (u ⊗ v)``."""
    u, v = _check_vec(A, u), _check_vec(A, v)
    return A.mat.apply(kron_vec(u, v, A.F))


def _check_linmap(A: Msc, g: Mat):
    if g.F != A.F or g.shape != (A.n, A.n):
        raise DimensionMismatch(f"expected an {A.n}x{A.n} map over {A.F}")


def change_basis(A: Msc, g: Mat) -> Msc:
    """``g A (g^-1 ⊗ g^-1)``: the MSC of the same algebra in the basis ``e g^-1``."""
    _check_linmap(A, g)
    if g.det() == 0:
        raise SingularBasisChange("basis change matrix is singular")
    ginv = g.inverse()
    return Msc(g @ A.mat @ kronecker(ginv, ginv))


def side_operator(A: Msc, i: int, side: Side | str) -> Mat:
    """Left operator ``A_i`` (``x -> e_i x``) or right operator ``A^o_i`` (``x -> x e_i``).

    ``i`` is 1-based, matching the usual ``A_1, ..., A_n`` labels.
    """
    side = Side(side.lower()) if isinstance(side, str) else side
    n = A.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"operator index {i} outside 1..{n}")
    i -= 1
    rows = A.mat.rows
    if side is Side.LEFT:
        out = tuple(tuple(rows[k][i * n + j] for j in range(n)) for k in range(n))
    else:
        out = tuple(tuple(rows[k][j * n + i] for j in range(n)) for k in range(n))
    return Mat._raw(out, A.F, n)


def operator_system(A: Msc) -> list[Mat]:
    """``(A_1, ..., A_n, A^o_1, ..., A^o_n)``."""
    if A._ops is None:
        A._ops = [side_operator(A, i, Side.LEFT) for i in range(1, A.n + 1)] + [
            side_operator(A, i, Side.RIGHT) for i in range(1, A.n + 1)
        ]
    return list(A._ops)


def trace_vector(A: Msc) -> list[Scalar]:
    return [side_operator(A, i, Side.LEFT).trace() for i in range(1, A.n + 1)]

"""Dense exact matrices over a :class:`~mscalg.field.FieldSpec`.

Pivoting is always "first nonzero entry in column order", so every result is
reproducible; there is no numerical pivoting because arithmetic is exact.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularBasisChange
from .field import FieldSpec, Scalar

Vec = tuple


class Mat:
    """Immutable ``rows x cols`` matrix with canonical entries."""

    __slots__ = ("F", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], F: FieldSpec, ncols: int | None = None):
        self.F = F
        self.rows = tuple(tuple(F(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def _raw(cls, rows, F: FieldSpec, ncols: int) -> Mat:
        # rows already canonical tuples
        m = cls.__new__(cls)
        m.F, m.rows, m.nrows, m.ncols = F, rows, len(rows), ncols
        return m

    @classmethod
    def zeros(cls, r: int, c: int, F: FieldSpec) -> Mat:
        z = F.zero
        return cls._raw(tuple((z,) * c for _ in range(r)), F, c)

    @classmethod
    def identity(cls, n: int, F: FieldSpec) -> Mat:
        return cls._raw(
            tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)), F, n
        )

    @classmethod
    def diag(cls, values: Sequence, F: FieldSpec) -> Mat:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], F)

    @classmethod
    def from_flat(cls, flat: Sequence, r: int, c: int, F: FieldSpec) -> Mat:
        if len(flat) != r * c:
            raise DimensionMismatch(f"{len(flat)} entries for a {r}x{c} matrix")
        return cls([flat[i * c:(i + 1) * c] for i in range(r)], F, c)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], F: FieldSpec, nrows: int | None = None) -> Mat:
        if not cols:
            return cls.zeros(nrows or 0, 0, F)
        return cls(list(zip(*cols)), F, len(cols))

    # -- basics ------------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vec]:
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.F == other.F and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.F, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Mat([{body}], {self.F})"

    def to_strings(self) -> list[list[str]]:
        return [[self.F.format(x) for x in r] for r in self.rows]

    @property
    def T(self) -> Mat:
        if not (self.nrows and self.ncols):
            return Mat.zeros(self.ncols, self.nrows, self.F)
        return Mat._raw(tuple(zip(*self.rows)), self.F, self.nrows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_scalar(self) -> bool:
        if not self.is_square():
            return False
        d = self.rows[0][0] if self.nrows else 0
        return all(self.rows[i][j] == (d if i == j else 0) for i in range(self.nrows) for j in range(self.ncols))

    def trace(self) -> Scalar:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return self.F.reduce(sum((self.rows[i][i] for i in range(self.nrows)), self.F.zero))

    # -- arithmetic ----------------------------------------------------------------

    def _check_same(self, other: Mat):
        if self.F != other.F:
            raise DimensionMismatch("field mismatch")
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: Mat) -> Mat:
        self._check_same(other)
        F = self.F
        return Mat._raw(
            tuple(tuple(F.add(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)), F, self.ncols
        )

    def __sub__(self, other: Mat) -> Mat:
        self._check_same(other)
        F = self.F
        return Mat._raw(
            tuple(tuple(F.sub(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)), F, self.ncols
        )

    def __neg__(self) -> Mat:
        return self.scale(self.F.neg(self.F.one))

    def scale(self, c) -> Mat:
        F = self.F
        c = F(c)
        return Mat._raw(tuple(tuple(F.mul(c, x) for x in r) for r in self.rows), F, self.ncols)

    def __matmul__(self, other: Mat) -> Mat:
        if self.F != other.F:
            raise DimensionMismatch("field mismatch")
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        F = self.F
        cols = other.columns()
        return Mat._raw(tuple(tuple(F.dot(r, c) for c in cols) for r in self.rows), F, other.ncols)

    def apply(self, v: Sequence) -> Vec:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(self.F.dot(r, v) for r in self.rows)

    def kron(self, other: Mat) -> Mat:
        return kronecker(self, other)

    def hstack(self, other: Mat) -> Mat:
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack needs equal row counts")
        return Mat._raw(tuple(r + s for r, s in zip(self.rows, other.rows)), self.F, self.ncols + other.ncols)

    @staticmethod
    def vstack(blocks: Sequence[Mat]) -> Mat:
        if not blocks:
            raise DimensionMismatch("vstack of nothing")
        c = blocks[0].ncols
        if any(b.ncols != c for b in blocks):
            raise DimensionMismatch("vstack needs equal column counts")
        return Mat._raw(tuple(r for b in blocks for r in b.rows), blocks[0].F, c)

    # -- elimination -------------------------------------------------------------

    def rref(self) -> tuple[Mat, int]:
        R, pivots = _rref(self)
        return R, len(pivots)

    def rank(self) -> int:
        return len(_rref(self)[1])

    def det(self) -> Scalar:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        F = self.F
        a = [list(r) for r in self.rows]
        n = self.nrows
        det = F.one
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                return F.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = F.neg(det)
            det = F.mul(det, a[c][c])
            inv = F.inv(a[c][c])
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = F.mul(a[r][c], inv)
                    a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[c])]
        return det

    def is_invertible(self) -> bool:
        return self.is_square() and self.det() != 0

    def inverse(self) -> Mat:
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        R, pivots = _rref(self.hstack(Mat.identity(n, self.F)))
        if pivots[:n] != list(range(n)):
            raise SingularBasisChange("matrix is singular")
        return Mat._raw(tuple(r[n:] for r in R.rows), self.F, n)

    def kernel(self) -> Subspace:
        return kernel_basis(self)


def _rref(M: Mat) -> tuple[Mat, list[int]]:
    F = M.F
    a = [list(r) for r in M.rows]
    m, n = M.nrows, M.ncols
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = next((r for r in range(row, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = F.inv(a[row][col])
        if inv != 1:
            a[row] = [F.mul(inv, x) for x in a[row]]
        prow = a[row]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], prow)]
        pivots.append(col)
        row += 1
    return Mat._raw(tuple(tuple(r) for r in a), F, n), pivots


def rref(M: Mat) -> tuple[Mat, int]:
    """Reduced row-echelon form and rank."""
    return M.rref()


def kronecker(B: Mat, C: Mat) -> Mat:
    """``B ⊗ C``: the block matrix whose ``(i, j)`` block is ``b_ij * C``."""
    if B.F != C.F:
        raise DimensionMismatch("field mismatch")
    F = B.F
    rows = []
    for brow in B.rows:
        for crow in C.rows:
            rows.append(tuple(F.mul(b, c) for b in brow for c in crow))
    return Mat._raw(tuple(rows), F, B.ncols * C.ncols)


def kron_vec(x: Sequence, y: Sequence, F: FieldSpec) -> Vec:
    return tuple(F.mul(a, b) for a in x for b in y)


def kernel_basis(M: Mat) -> Subspace:
    """Basis of ``{x : Mx = 0}``; each vector is checked against ``M``."""
    F = M.F
    R, pivots = _rref(M)
    free = [j for j in range(M.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * M.ncols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.rows[i][f])
        basis.append(tuple(v))
    for v in basis:
        assert all(x == 0 for x in M.apply(v)), "kernel vector failed verification"
    return Subspace(M.ncols, basis, F)


class Subspace:
    """Subspace of ``F^n`` stored by its reduced row-echelon basis.

    Two subspaces are equal exactly when their reduced bases agree.
    """

    __slots__ = ("n", "F", "basis", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence], F: FieldSpec):
        vecs = [tuple(F(x) for x in v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise DimensionMismatch("vector length does not match ambient dimension")
        self.n = n
        self.F = F
        if vecs:
            R, pivots = _rref(Mat._raw(tuple(vecs), F, n))
            self.basis = R.rows[: len(pivots)]
            self.pivots = tuple(pivots)
        else:
            self.basis = ()
            self.pivots = ()

    @classmethod
    def zero(cls, n: int, F: FieldSpec) -> Subspace:
        return cls(n, [], F)

    @classmethod
    def full(cls, n: int, F: FieldSpec) -> Subspace:
        return cls(n, Mat.identity(n, F).rows, F)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.n

    def contains(self, v: Sequence) -> bool:
        """Membership by reduction against the echelon basis."""
        F = self.F
        w = [F(x) for x in v]
        for b, pc in zip(self.basis, self.pivots):
            if w[pc] != 0:
                f = w[pc]
                w = [F.sub(x, F.mul(f, y)) for x, y in zip(w, b)]
        return all(x == 0 for x in w)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.n, list(self.basis) + list(other.basis), self.F)

    def is_invariant(self, op: Mat) -> bool:
        return all(self.contains(op.apply(b)) for b in self.basis)

    def transform(self, g: Mat) -> Subspace:
        return Subspace(self.n, [g.apply(b) for b in self.basis], self.F)

    def annihilator(self) -> Subspace:
        """``{phi : phi . w = 0 for all w}``, as a subspace of the dual space."""
        if not self.basis:
            return Subspace.full(self.n, self.F)
        return kernel_basis(Mat._raw(self.basis, self.F, self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.n == other.n and self.F == other.F and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.n, self.F, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, basis={[list(map(str, b)) for b in self.basis]})"

    def to_strings(self) -> list[list[str]]:
        return [[self.F.format(x) for x in b] for b in self.basis]


def matrices_over(n: int, F: FieldSpec) -> Iterable[Mat]:
    """All ``n x n`` matrices over GF(p), lexicographic in row-major entries."""
    for flat in itertools.product(range(F.p), repeat=n * n):
        yield Mat._raw(tuple(flat[i * n:(i + 1) * n] for i in range(n)), F, n)


def gl_order(n: int, p: int) -> int:
    out = 1
    for k in range(n):
        out *= p**n - p**k
    return out

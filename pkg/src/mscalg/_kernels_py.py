"""Pure-Python GF(p) kernels; the reference twin of ``_kernels.pyx``.

Every function takes an MSC as a flat row-major tuple of residues
(``n`` rows of ``n*n`` entries) and works modulo a prime ``p``.  Matrices
``g`` are flat row-major tuples of length ``n*n``.  Output order is
deterministic: GL(n, p) is scanned lexicographically over ``g``'s entries.
"""

from __future__ import annotations

from itertools import product


def det_mod(g, n: int, p: int) -> int:
    if n == 1:
        return g[0] % p
    if n == 2:
        return (g[0] * g[3] - g[1] * g[2]) % p
    if n == 3:
        return (
            g[0] * (g[4] * g[8] - g[5] * g[7])
            - g[1] * (g[3] * g[8] - g[5] * g[6])
            + g[2] * (g[3] * g[7] - g[4] * g[6])
        ) % p
    a = [list(g[r * n:(r + 1) * n]) for r in range(n)]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def inverse_mod(g, n: int, p: int) -> tuple:
    a = [list(g[r * n:(r + 1) * n]) + [int(r == c) for c in range(n)] for r in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] % p)
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, p)
        a[c] = [x * inv % p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return tuple(x for r in range(n) for x in a[r][n:])


def _intertwines(g, a, b, n: int, p: int) -> bool:
    """``g A == B (g ⊗ g)`` modulo ``p``, with early exit."""
    nn = n * n
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for k in range(n):
                lhs = 0
                for m in range(n):
                    lhs += g[k * n + m] * a[m * nn + col]
                rhs = 0
                brow = k * nn
                for r in range(n):
                    gri = g[r * n + i]
                    if gri:
                        for s in range(n):
                            rhs += b[brow + r * n + s] * gri * g[s * n + j]
                if (lhs - rhs) % p:
                    return False
    return True


def scan_isomorphisms(a, b, n: int, p: int, first_only: bool = False) -> list[tuple]:
    """All ``g`` in GL(n, p) with ``g A = B (g ⊗ g)``, i.e. ``change_basis(A, g) == B``."""
    out = []
    for g in product(range(p), repeat=n * n):
        if det_mod(g, n, p) and _intertwines(g, a, b, n, p):
            out.append(g)
            if first_only:
                break
    return out


def change_basis_mod(a, g, n: int, p: int) -> tuple:
    nn = n * n
    h = inverse_mod(g, n, p)
    # A (h ⊗ h), column (r, s) -> sum_{i,j} A[:, (i,j)] h[i,r] h[j,s]
    t = [0] * (n * nn)
    for r in range(n):
        for s in range(n):
            col = r * n + s
            for i in range(n):
                hir = h[i * n + r]
                if not hir:
                    continue
                for j in range(n):
                    w = hir * h[j * n + s] % p
                    if w:
                        src = i * n + j
                        for k in range(n):
                            t[k * nn + col] += a[k * nn + src] * w
    out = [0] * (n * nn)
    for k in range(n):
        for c in range(nn):
            acc = 0
            for m in range(n):
                acc += g[k * n + m] * t[m * nn + c]
            out[k * nn + c] = acc % p
    return tuple(out)


def encode(a, p: int) -> int:
    code = 0
    for x in a:
        code = code * p + x
    return code


def orbit_codes(a, n: int, p: int) -> set:
    """Codes of every MSC isomorphic to ``A`` (base-``p`` digits, first entry most significant)."""
    out = set()
    for g in product(range(p), repeat=n * n):
        if det_mod(g, n, p):
            out.add(encode(change_basis_mod(a, g, n, p), p))
    return out


def rank_mod(rows, ncols: int, p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        prow = [x * inv % p for x in a[rank]]
        a[rank] = prow
        for r in range(rank + 1, len(a)):
            f = a[r][c]
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], prow)]
        rank += 1
    return rank


def derivation_rank(a, n: int, p: int) -> int:
    """Rank of the ``n**3 x n**2`` derivation system matrix modulo ``p``."""
    nn = n * n
    rows = []
    for k in range(n):
        for i in range(n):
            for j in range(n):
                row = [0] * nn
                col = i * n + j
                for m in range(n):
                    row[k * n + m] += a[m * nn + col]
                    row[m * n + i] -= a[k * nn + m * n + j]
                    row[m * n + j] -= a[k * nn + i * n + m]
                rows.append(row)
    return rank_mod(rows, nn, p)


def _operators(a, n: int) -> list[list[list[int]]]:
    nn = n * n
    ops = []
    for i in range(n):
        ops.append([[a[k * nn + i * n + j] for j in range(n)] for k in range(n)])
    for i in range(n):
        ops.append([[a[k * nn + j * n + i] for j in range(n)] for k in range(n)])
    return ops


def _reduce_into(basis, pivots, v, p):
    v = list(v)
    for b, pc in zip(basis, pivots):
        f = v[pc]
        if f:
            v = [(x - f * y) % p for x, y in zip(v, b)]
    return v


def closure_dim(ops, v, n: int, p: int) -> int:
    """Dimension of the smallest subspace containing ``v`` invariant under ``ops``."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    queue = [list(v)]
    while queue:
        w = _reduce_into(basis, pivots, queue.pop(), p)
        pc = next((c for c, x in enumerate(w) if x), None)
        if pc is None:
            continue
        inv = pow(w[pc], -1, p)
        w = [x * inv % p for x in w]
        basis.append(w)
        pivots.append(pc)
        if len(basis) == n:
            return n
        for op in ops:
            queue.append([sum(r[m] * w[m] for m in range(n)) % p for r in op])
    return len(basis)


def projective_points(n: int, p: int):
    """Line representatives with first nonzero coordinate 1, in lexicographic order."""
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def proper_closure_line(a, n: int, p: int):
    """First projective point whose closure is a proper subspace, or None (simple)."""
    ops = _operators(a, n)
    for v in projective_points(n, p):
        if closure_dim(ops, v, n, p) < n:
            return v
    return None


def decode(code: int, total: int, p: int) -> tuple:
    """Inverse of :func:`encode` for an MSC with ``total`` entries."""
    out = [0] * total
    for i in range(total - 1, -1, -1):
        code, out[i] = divmod(code, p)
    return tuple(out)


def _trivial_aut(a, n: int, p: int) -> bool:
    identity = tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))
    for g in product(range(p), repeat=n * n):
        if g != identity and det_mod(g, n, p) and _intertwines(g, a, a, n, p):
            return False
    return True


def census(n: int, p: int, start: int, stop: int) -> bytes:
    """Property flags for the MSCs with codes in ``[start, stop)``.

    Bit 0: trivial derivations.  Bit 1: trivial automorphisms.  Bit 2: simple.
    """
    out = bytearray()
    for code in range(start, stop):
        a = decode(code, n * n * n, p)
        flags = 0
        if derivation_rank(a, n, p) == n * n:
            flags |= 1
        if _trivial_aut(a, n, p):
            flags |= 2
        if proper_closure_line(a, n, p) is None:
            flags |= 4
        out.append(flags)
    return bytes(out)


def classify(mscs, n: int, p: int, check_aut: bool = True) -> bytes:
    """Census flags for each flat MSC in ``mscs``; bit 1 stays clear without ``check_aut``."""
    out = bytearray()
    for a in mscs:
        a = tuple(x % p for x in a)
        flags = 0
        if derivation_rank(a, n, p) == n * n:
            flags |= 1
        if check_aut and _trivial_aut(a, n, p):
            flags |= 2
        if proper_closure_line(a, n, p) is None:
            flags |= 4
        out.append(flags)
    return bytes(out)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels.  Same API and output order as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 5
    MAXNN = 25
    MAXA = 125
    MAXQ = 255


cdef inline long _mod(long x, long p) nogil:
    x %= p
    return x + p if x < 0 else x


cdef long _det(long* g, int n, long p, long* inv) nogil:
    cdef long a[MAXNN]
    cdef int r, c, k, piv
    cdef long det = 1, f, t
    if n == 1:
        return _mod(g[0], p)
    if n == 2:
        return _mod(g[0] * g[3] - g[1] * g[2], p)
    if n == 3:
        return _mod(g[0] * (g[4] * g[8] - g[5] * g[7])
                    - g[1] * (g[3] * g[8] - g[5] * g[6])
                    + g[2] * (g[3] * g[7] - g[4] * g[6]), p)
    for r in range(n * n):
        a[r] = g[r]
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if a[r * n + c] != 0:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            for k in range(n):
                t = a[c * n + k]
                a[c * n + k] = a[piv * n + k]
                a[piv * n + k] = t
            det = p - det
        det = det * a[c * n + c] % p
        for r in range(c + 1, n):
            f = a[r * n + c] * inv[a[c * n + c]] % p
            if f:
                for k in range(n):
                    a[r * n + k] = _mod(a[r * n + k] - f * a[c * n + k], p)
    return det % p


cdef int _inverse(long* g, long* h, int n, long p, long* inv) nogil:
    cdef long a[MAXN * 2 * MAXN]
    cdef int r, c, k, piv, w = 2 * n
    cdef long f, t
    for r in range(n):
        for c in range(n):
            a[r * w + c] = g[r * n + c]
            a[r * w + n + c] = 1 if r == c else 0
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if a[r * w + c] != 0:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            for k in range(w):
                t = a[c * w + k]
                a[c * w + k] = a[piv * w + k]
                a[piv * w + k] = t
        f = inv[a[c * w + c]]
        for k in range(w):
            a[c * w + k] = a[c * w + k] * f % p
        for r in range(n):
            if r != c and a[r * w + c] != 0:
                f = a[r * w + c]
                for k in range(w):
                    a[r * w + k] = _mod(a[r * w + k] - f * a[c * w + k], p)
    for r in range(n):
        for c in range(n):
            h[r * n + c] = a[r * w + n + c]
    return 1


cdef bint _intertwines(long* g, long* a, long* b, int n, long p) nogil:
    cdef int i, j, k, m, r, s, col, nn = n * n
    cdef long lhs, rhs, gri
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for k in range(n):
                lhs = 0
                for m in range(n):
                    lhs += g[k * n + m] * a[m * nn + col]
                rhs = 0
                for r in range(n):
                    gri = g[r * n + i]
                    if gri:
                        for s in range(n):
                            rhs += b[k * nn + r * n + s] * gri * g[s * n + j]
                if (lhs - rhs) % p:
                    return False
    return True


cdef long _modinv(long x, long p) nogil:
    cdef long r0 = p, r1 = x, s0 = 0, s1 = 1, q, t
    while r1:
        q = r0 // r1
        t = r0 - q * r1
        r0 = r1
        r1 = t
        t = s0 - q * s1
        s0 = s1
        s1 = t
    return _mod(s0, p)


cdef long* _inv_table(long p):
    cdef long* inv = <long*> malloc(p * sizeof(long))
    cdef long x
    inv[0] = 0
    for x in range(1, p):
        inv[x] = _modinv(x, p)
    return inv


cdef bint _next(long* g, int nn, long p) nogil:
    """Odometer step; last entry fastest.  False once wrapped around."""
    cdef int idx = nn - 1
    while idx >= 0:
        g[idx] += 1
        if g[idx] < p:
            return True
        g[idx] = 0
        idx -= 1
    return False


cdef void _load(seq, long* dst, long p):
    cdef int i
    for i in range(len(seq)):
        dst[i] = _mod(seq[i], p)


def scan_isomorphisms(a, b, int n, long p, bint first_only=False):
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    cdef long A[MAXA]
    cdef long B[MAXA]
    cdef long g[MAXNN]
    cdef int nn = n * n, i
    cdef long* inv = _inv_table(p)
    _load(a, A, p)
    _load(b, B, p)
    for i in range(nn):
        g[i] = 0
    out = []
    try:
        while True:
            if _det(g, n, p, inv) and _intertwines(g, A, B, n, p):
                out.append(tuple([g[i] for i in range(nn)]))
                if first_only:
                    break
            if not _next(g, nn, p):
                break
    finally:
        free(inv)
    return out


cdef void _change_basis(long* a, long* g, long* h, long* out, int n, long p) nogil:
    cdef long t[MAXA]
    cdef int r, s, i, j, k, m, c, col, src, nn = n * n
    cdef long hir, w, acc
    for c in range(n * nn):
        t[c] = 0
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
    for c in range(n * nn):
        t[c] %= p
    for k in range(n):
        for c in range(nn):
            acc = 0
            for m in range(n):
                acc += g[k * n + m] * t[m * nn + c]
            out[k * nn + c] = acc % p


def change_basis_mod(a, g, int n, long p):
    cdef long A[MAXA]
    cdef long G[MAXNN]
    cdef long H[MAXNN]
    cdef long O[MAXA]
    cdef long* inv = _inv_table(p)
    _load(a, A, p)
    _load(g, G, p)
    try:
        if not _inverse(G, H, n, p, inv):
            raise ValueError("singular basis change")
        _change_basis(A, G, H, O, n, p)
    finally:
        free(inv)
    return tuple([O[i] for i in range(n * n * n)])


def encode(a, long p):
    code = 0
    for x in a:
        code = code * p + x
    return code


def orbit_codes(a, int n, long p):
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    cdef long A[MAXA]
    cdef long G[MAXNN]
    cdef long H[MAXNN]
    cdef long O[MAXA]
    cdef int nn = n * n, total = n * nn, i
    cdef long* inv = _inv_table(p)
    cdef unsigned long long code
    _load(a, A, p)
    for i in range(nn):
        G[i] = 0
    out = set()
    try:
        while True:
            if _det(G, n, p, inv):
                _inverse(G, H, n, p, inv)
                _change_basis(A, G, H, O, n, p)
                code = 0
                for i in range(total):
                    code = code * p + O[i]
                out.add(code)
            if not _next(G, nn, p):
                break
    finally:
        free(inv)
    return out


cdef int _rank(long* m, int nrows, int ncols, long p, long* inv) nogil:
    cdef int rank = 0, r, c, k, piv
    cdef long f, t
    for c in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if m[r * ncols + c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(ncols):
                t = m[rank * ncols + k]
                m[rank * ncols + k] = m[piv * ncols + k]
                m[piv * ncols + k] = t
        f = inv[m[rank * ncols + c]]
        for k in range(ncols):
            m[rank * ncols + k] = m[rank * ncols + k] * f % p
        for r in range(rank + 1, nrows):
            f = m[r * ncols + c]
            if f:
                for k in range(ncols):
                    m[r * ncols + k] = _mod(m[r * ncols + k] - f * m[rank * ncols + k], p)
        rank += 1
    return rank


def rank_mod(rows, int ncols, long p):
    cdef int nrows = len(rows), r, c
    cdef long* m = <long*> malloc(max(nrows * ncols, 1) * sizeof(long))
    cdef long* inv = _inv_table(p)
    try:
        for r in range(nrows):
            for c in range(ncols):
                m[r * ncols + c] = _mod(rows[r][c], p)
        return _rank(m, nrows, ncols, p, inv)
    finally:
        free(m)
        free(inv)


cdef int _derivation_rank(long* A, int n, long p, long* inv, long* M) nogil:
    cdef int nn = n * n, k, i, j, m, row, col
    for row in range(n * nn * nn):
        M[row] = 0
    row = 0
    for k in range(n):
        for i in range(n):
            for j in range(n):
                col = i * n + j
                for m in range(n):
                    M[row * nn + k * n + m] += A[m * nn + col]
                    M[row * nn + m * n + i] -= A[k * nn + m * n + j]
                    M[row * nn + m * n + j] -= A[k * nn + i * n + m]
                row += 1
    for row in range(n * nn * nn):
        M[row] = _mod(M[row], p)
    return _rank(M, n * nn, nn, p, inv)


def derivation_rank(a, int n, long p):
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    cdef long A[MAXA]
    cdef long* M = <long*> malloc(n * n * n * n * n * sizeof(long))
    cdef long* inv = _inv_table(p)
    _load(a, A, p)
    try:
        return _derivation_rank(A, n, p, inv, M)
    finally:
        free(M)
        free(inv)


cdef int _closure_dim(long* ops, int nops, long* v, int n, long p, long* inv) nogil:
    cdef long basis[MAXNN]
    cdef int pivots[MAXN]
    cdef long queue[MAXQ]
    cdef long w[MAXN]
    cdef int qlen = 0, dim = 0, b, c, pc, o, r, m
    cdef long f, acc
    for c in range(n):
        queue[c] = v[c]
    qlen = 1
    while qlen > 0:
        qlen -= 1
        for c in range(n):
            w[c] = queue[qlen * n + c]
        for b in range(dim):
            f = w[pivots[b]]
            if f:
                for c in range(n):
                    w[c] = _mod(w[c] - f * basis[b * n + c], p)
        pc = -1
        for c in range(n):
            if w[c]:
                pc = c
                break
        if pc < 0:
            continue
        f = inv[w[pc]]
        for c in range(n):
            w[c] = w[c] * f % p
        # keep the stored basis reduced against the new pivot as well
        for b in range(dim):
            f = basis[b * n + pc]
            if f:
                for c in range(n):
                    basis[b * n + c] = _mod(basis[b * n + c] - f * w[c], p)
        for c in range(n):
            basis[dim * n + c] = w[c]
        pivots[dim] = pc
        dim += 1
        if dim == n:
            return n
        for o in range(nops):
            for r in range(n):
                acc = 0
                for m in range(n):
                    acc += ops[o * n * n + r * n + m] * w[m]
                queue[qlen * n + r] = acc % p
            qlen += 1
    return dim


def closure_dim(ops, v, int n, long p):
    cdef int nops = len(ops), o, r, c
    cdef long* O = <long*> malloc(nops * n * n * sizeof(long))
    cdef long V[MAXN]
    cdef long* inv = _inv_table(p)
    try:
        for o in range(nops):
            for r in range(n):
                for c in range(n):
                    O[o * n * n + r * n + c] = _mod(ops[o][r][c], p)
        for c in range(n):
            V[c] = _mod(v[c], p)
        return _closure_dim(O, nops, V, n, p, inv)
    finally:
        free(O)
        free(inv)


cdef void _operators(long* A, long* O, int n) nogil:
    cdef int nn = n * n, i, j, k
    for i in range(n):
        for k in range(n):
            for j in range(n):
                O[i * nn + k * n + j] = A[k * nn + i * n + j]
                O[(n + i) * nn + k * n + j] = A[k * nn + j * n + i]


cdef int _proper_line(long* A, long* V, int n, long p, long* inv) nogil:
    """Fill ``V`` with the first line whose closure is proper; 0 if none."""
    cdef long O[2 * MAXN * MAXNN]
    cdef int lead, c
    _operators(A, O, n)
    for lead in range(n):
        for c in range(n):
            V[c] = 0
        V[lead] = 1
        while True:
            if _closure_dim(O, 2 * n, V, n, p, inv) < n:
                return 1
            if lead == n - 1 or not _next(V + lead + 1, n - lead - 1, p):
                break
    return 0


def proper_closure_line(a, int n, long p):
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    cdef long A[MAXA]
    cdef long V[MAXN]
    cdef long* inv = _inv_table(p)
    cdef int found
    _load(a, A, p)
    try:
        found = _proper_line(A, V, n, p, inv)
    finally:
        free(inv)
    if found:
        return tuple([V[c] for c in range(n)])
    return None


cdef bint _trivial_aut(long* A, int n, long p, long* inv) nogil:
    """True iff the identity is the only g in GL(n, p) with g A = A (g x g)."""
    cdef long g[MAXNN]
    cdef int nn = n * n, i
    cdef bint is_id
    for i in range(nn):
        g[i] = 0
    while True:
        if _det(g, n, p, inv) and _intertwines(g, A, A, n, p):
            is_id = True
            for i in range(nn):
                if g[i] != (1 if i % (n + 1) == 0 else 0):
                    is_id = False
                    break
            if not is_id:
                return False
        if not _next(g, nn, p):
            return True


def census(int n, long p, start, stop):
    """Property flags for the MSCs with codes in ``[start, stop)``.

    Bit 0: trivial derivations.  Bit 1: trivial automorphisms.  Bit 2: simple.
    """
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    cdef long A[MAXA]
    cdef long V[MAXN]
    cdef int total = n * n * n, nn = n * n, i, flags
    cdef unsigned long long code, rest, lo = start, hi = stop
    cdef long* M = <long*> malloc(n * nn * nn * sizeof(long))
    cdef long* inv = _inv_table(p)
    out = bytearray(hi - lo if hi > lo else 0)
    cdef unsigned char[:] view = out
    try:
        with nogil:
            code = lo
            while code < hi:
                rest = code
                for i in range(total - 1, -1, -1):
                    A[i] = rest % p
                    rest = rest // p
                flags = 0
                if _derivation_rank(A, n, p, inv, M) == nn:
                    flags |= 1
                if _trivial_aut(A, n, p, inv):
                    flags |= 2
                if not _proper_line(A, V, n, p, inv):
                    flags |= 4
                view[code - lo] = flags
                code += 1
    finally:
        free(M)
        free(inv)
    return bytes(out)


def classify(mscs, int n, long p, bint check_aut=True):
    """Census flags for each flat MSC in ``mscs``; bit 1 stays clear without ``check_aut``."""
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    cdef long A[MAXA]
    cdef long V[MAXN]
    cdef int nn = n * n, flags, idx = 0
    cdef long* M = <long*> malloc(n * nn * nn * sizeof(long))
    cdef long* inv = _inv_table(p)
    out = bytearray(len(mscs))
    try:
        for a in mscs:
            _load(a, A, p)
            with nogil:
                flags = 0
                if _derivation_rank(A, n, p, inv, M) == nn:
                    flags |= 1
                if check_aut and _trivial_aut(A, n, p, inv):
                    flags |= 2
                if not _proper_line(A, V, n, p, inv):
                    flags |= 4
            out[idx] = flags
            idx += 1
    finally:
        free(M)
        free(inv)
    return bytes(out)

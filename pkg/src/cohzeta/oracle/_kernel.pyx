# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; mirrors ``_kernel_py`` exactly."""

import numpy as np

cimport numpy as cnp

BACKEND = "cython"


cdef long _inv(long a, long p):
    cdef long r = 1, e = p - 2
    a %= p
    while e > 0:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


cdef class _Search:
    cdef long p, dim, nops, stop_col, min_dim, max_dim
    cdef long long guard, examined
    cdef bint aborted
    cdef long[:, :, ::1] ops
    cdef long[:, ::1] state       # row indexed by pivot column
    cdef long[::1] has            # 1 where a pivot is present
    cdef long ndim_state
    cdef long[:, ::1] x0          # per-column particular solution
    cdef long[:, :, ::1] basis    # per-column nullspace basis
    cdef long[::1] nbasis
    cdef long[:, ::1] freecols    # per-column free column list
    cdef long[::1] nfree
    cdef long[:, ::1] mat         # scratch augmented system
    cdef long[:, ::1] imgs        # scratch reduced images
    cdef long[::1] base
    cdef long[:, ::1] digits      # per-column odometer
    cdef list out

    def __init__(self, ops, long p, long dim, long stop_col, long min_dim,
                 long max_dim, long long guard):
        self.p = p
        self.dim = dim
        self.nops = ops.shape[0]
        self.ops = ops
        self.stop_col = stop_col
        self.min_dim = min_dim
        self.max_dim = max_dim
        self.guard = guard
        self.examined = 0
        self.aborted = False
        cdef long d1 = dim if dim > 0 else 1
        self.state = np.zeros((d1, d1), dtype=np.int64)
        self.has = np.zeros(d1, dtype=np.int64)
        self.ndim_state = 0
        self.x0 = np.zeros((d1, d1), dtype=np.int64)
        self.basis = np.zeros((d1, d1, d1), dtype=np.int64)
        self.nbasis = np.zeros(d1, dtype=np.int64)
        self.freecols = np.zeros((d1, d1), dtype=np.int64)
        self.nfree = np.zeros(d1, dtype=np.int64)
        self.mat = np.zeros((max(self.nops, 1) * d1, d1 + 1), dtype=np.int64)
        self.imgs = np.zeros((d1, d1), dtype=np.int64)
        self.base = np.zeros(d1, dtype=np.int64)
        self.digits = np.zeros((d1, d1), dtype=np.int64)
        self.out = []

    cdef void _reduce_into(self, long g, long src, long[::1] dst):
        cdef long k, piv, c, dim = self.dim, p = self.p
        for k in range(dim):
            dst[k] = self.ops[g, src, k]
        for piv in range(dim):
            if self.has[piv]:
                c = dst[piv]
                if c:
                    for k in range(piv, dim):
                        if self.state[piv, k]:
                            dst[k] = (dst[k] - c * self.state[piv, k]) % p
                            if dst[k] < 0:
                                dst[k] += p

    cdef bint _prepare(self, long col):
        """Solve for the admissible rows with pivot ``col``; False if none."""
        cdef long dim = self.dim, p = self.p
        cdef long nf = 0, j, g, coord, nrows = 0, a, r, c, sel, i, k, f, inv
        cdef bint nz
        for j in range(col + 1, dim):
            if not self.has[j]:
                self.freecols[col, nf] = j
                nf += 1
        self.nfree[col] = nf
        for g in range(self.nops):
            self._reduce_into(g, col, self.base)
            for a in range(nf):
                self._reduce_into(g, self.freecols[col, a], self.imgs[a])
            for coord in range(col + 1, dim):
                if self.has[coord]:
                    continue
                nz = self.base[coord] != 0
                for a in range(nf):
                    self.mat[nrows, a] = self.imgs[a, coord]
                    if self.imgs[a, coord]:
                        nz = True
                if nz:
                    self.mat[nrows, nf] = (p - self.base[coord]) % p
                    nrows += 1
        # Gauss-Jordan on mat[:nrows, :nf+1]
        cdef long[::1] pivcol = np.empty(nf + 1, dtype=np.int64)
        cdef long[::1] isfree = np.ones(nf + 1, dtype=np.int64)
        r = 0
        for c in range(nf):
            if r == nrows:
                break
            sel = -1
            for i in range(r, nrows):
                if self.mat[i, c] % p:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                for k in range(nf + 1):
                    self.mat[r, k], self.mat[sel, k] = self.mat[sel, k], self.mat[r, k]
            inv = _inv(self.mat[r, c], p)
            for k in range(nf + 1):
                self.mat[r, k] = (self.mat[r, k] * inv) % p
            for i in range(nrows):
                if i != r and self.mat[i, c]:
                    f = self.mat[i, c]
                    for k in range(nf + 1):
                        self.mat[i, k] = (self.mat[i, k] - f * self.mat[r, k]) % p
                        if self.mat[i, k] < 0:
                            self.mat[i, k] += p
            pivcol[r] = c
            isfree[c] = 0
            r += 1
        for i in range(r, nrows):
            if self.mat[i, nf] % p:
                return False
        for a in range(nf):
            self.x0[col, a] = 0
        for i in range(r):
            self.x0[col, pivcol[i]] = self.mat[i, nf]
        cdef long nb = 0
        for c in range(nf):
            if isfree[c]:
                for a in range(nf):
                    self.basis[col, nb, a] = 0
                self.basis[col, nb, c] = 1
                for i in range(r):
                    self.basis[col, nb, pivcol[i]] = (p - self.mat[i, c]) % p
                nb += 1
        self.nbasis[col] = nb
        return True

    cdef void _emit(self):
        cdef long piv, k, dim = self.dim
        rows = []
        for piv in range(dim):
            if self.has[piv]:
                rows.append(tuple([self.state[piv, k] for k in range(dim)]))
        self.out.append(tuple(rows))

    cdef void _rec(self, long col):
        cdef long cur, nb, nf, a, b, k, v, p = self.p, dim = self.dim
        if self.aborted:
            return
        if col < self.stop_col:
            self._emit()
            return
        cur = self.ndim_state
        if cur + col >= self.min_dim:
            self._rec(col - 1)
            if self.aborted:
                return
        if cur + 1 > self.max_dim or cur + 1 + col < self.min_dim:
            return
        if not self._prepare(col):
            return
        nb = self.nbasis[col]
        nf = self.nfree[col]
        for b in range(nb):
            self.digits[col, b] = 0
        while True:
            self.examined += 1
            if self.examined > self.guard:
                self.aborted = True
                return
            for k in range(dim):
                self.state[col, k] = 0
            self.state[col, col] = 1
            for a in range(nf):
                v = self.x0[col, a]
                for b in range(nb):
                    if self.digits[col, b]:
                        v += self.digits[col, b] * self.basis[col, b, a]
                self.state[col, self.freecols[col, a]] = v % p
            self.has[col] = 1
            self.ndim_state += 1
            self._rec(col - 1)
            self.has[col] = 0
            self.ndim_state -= 1
            if self.aborted:
                return
            # odometer over nullspace coordinates, last digit fastest
            b = nb - 1
            while b >= 0:
                self.digits[col, b] += 1
                if self.digits[col, b] < p:
                    break
                self.digits[col, b] = 0
                b -= 1
            if b < 0:
                return


def dfs(ops, long p, long dim, long start_col, long stop_col, init_rows,
        long min_dim, long max_dim, long long guard):
    """See ``_kernel_py.dfs``."""
    arr = np.zeros((max(len(ops), 1), max(dim, 1), max(dim, 1)), dtype=np.int64)
    for g, mat in enumerate(ops):
        for i in range(dim):
            for j in range(dim):
                arr[g, i, j] = int(mat[i][j]) % p
    s = _Search(arr[: len(ops)] if len(ops) else arr[:0], p, dim, stop_col,
                min_dim, max_dim, guard)
    cdef long piv
    for row in init_rows:
        piv = next(i for i, x in enumerate(row) if x)
        for k in range(dim):
            s.state[piv, k] = int(row[k]) % p
        s.has[piv] = 1
        s.ndim_state += 1
    s._rec(start_col)
    return s.out, s.examined, s.aborted


def rank(rows, long p, long dim):
    """Rank over F_p of a list of length-``dim`` vectors."""
    cdef long n = len(rows)
    if n == 0 or dim == 0:
        return 0
    m_arr = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
    cdef long[:, ::1] m = m_arr
    cdef long rk = 0, c, i, k, sel, f, inv
    for c in range(dim):
        sel = -1
        for i in range(rk, n):
            if m[i, c]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != rk:
            for k in range(dim):
                m[rk, k], m[sel, k] = m[sel, k], m[rk, k]
        inv = _inv(m[rk, c], p)
        for k in range(dim):
            m[rk, k] = (m[rk, k] * inv) % p
        for i in range(n):
            if i != rk and m[i, c]:
                f = m[i, c]
                for k in range(dim):
                    m[i, k] = (m[i, k] - f * m[rk, k]) % p
                    if m[i, k] < 0:
                        m[i, k] += p
        rk += 1
        if rk == n:
            break
    return rk

"""Pure-Python enumeration kernel over F_p (reference and fallback).

Vectors are lists of ints in ``[0, p)``.  An operator is a ``dim x dim``
matrix whose row ``j`` is the image of basis vector ``e_j``; every operator
must map ``e_j`` into the span of ``e_{j+1}, ..., e_{dim-1}``.  Under that
condition a subspace in reduced echelon form is invariant iff each of its
rows maps into the span of the rows with larger pivots, so the search below
builds invariant subspaces pivot by pivot from the last column, and at each
step solves a linear system for the admissible new rows instead of testing
candidates.
"""

from __future__ import annotations

from itertools import product

BACKEND = "python"


def _solve(A: list[list[int]], b: list[int], ncols: int, p: int):
    """Solutions of ``A x = b`` over F_p as (particular, nullspace basis), or None."""
    rows = [A[i][:] + [b[i]] for i in range(len(A))]
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rr = rows[r]
                rows[i] = [(ri[k] - f * rr[k]) % p for k in range(ncols + 1)]
        piv_cols.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][ncols] % p:
            return None
    x0 = [0] * ncols
    for i, c in enumerate(piv_cols):
        x0[c] = rows[i][ncols]
    free = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, c in enumerate(piv_cols):
            v[c] = (-rows[i][fc]) % p
        basis.append(v)
    return x0, basis


def _reduce(v: list[int], state: dict[int, list[int]], p: int) -> list[int]:
    v = v[:]
    for piv, row in state.items():
        c = v[piv]
        if c:
            for k in range(piv, len(v)):
                if row[k]:
                    v[k] = (v[k] - c * row[k]) % p
    return v


def dfs(ops, p, dim, start_col, stop_col, init_rows, min_dim, max_dim, guard):
    """Depth-first search over invariant subspaces.

    Processes columns ``start_col`` down to ``stop_col`` starting from the
    invariant subspace ``init_rows`` (rows supported on columns greater than
    ``start_col``).  Returns ``(states, examined, aborted)`` where each state
    is a tuple of rows in increasing pivot order.
    """
    ops = [[list(map(int, row)) for row in g] for g in ops]
    out: list[tuple[tuple[int, ...], ...]] = []
    examined = 0
    aborted = False

    def admissible_rows(col: int, state: dict[int, list[int]]):
        free = [j for j in range(col + 1, dim) if j not in state]
        A: list[list[int]] = []
        b: list[int] = []
        for g in ops:
            base = _reduce(g[col], state, p)
            imgs = [_reduce(g[j], state, p) for j in free]
            for coord in range(col + 1, dim):
                if coord in state:
                    continue
                row = [img[coord] for img in imgs]
                if any(row) or base[coord]:
                    A.append(row)
                    b.append((-base[coord]) % p)
        sol = _solve(A, b, len(free), p)
        if sol is None:
            return
        x0, basis = sol
        for coeffs in product(range(p), repeat=len(basis)):
            x = x0[:]
            for c, v in zip(coeffs, basis):
                if c:
                    x = [(xi + c * vi) % p for xi, vi in zip(x, v)]
            row = [0] * dim
            row[col] = 1
            for j, xj in zip(free, x):
                row[j] = xj
            yield row

    def rec(col: int, state: dict[int, list[int]]):
        nonlocal examined, aborted
        if aborted:
            return
        if col < stop_col:
            out.append(tuple(tuple(state[k]) for k in sorted(state)))
            return
        cur = len(state)
        if cur + col >= min_dim:
            rec(col - 1, state)
        if cur + 1 <= max_dim and cur + 1 + col >= min_dim:
            for row in admissible_rows(col, state):
                examined += 1
                if examined > guard:
                    aborted = True
                    return
                state[col] = row
                rec(col - 1, state)
                del state[col]
                if aborted:
                    return

    init = {}
    for row in init_rows:
        row = list(map(int, row))
        piv = next(i for i, x in enumerate(row) if x)
        init[piv] = row
    rec(start_col, init)
    return out, examined, aborted


def rank(rows, p: int, dim: int) -> int:
    """Rank over F_p of a list of length-``dim`` vectors."""
    m = [[int(x) % p for x in r] for r in rows]
    rk = 0
    for c in range(dim):
        sel = None
        for i in range(rk, len(m)):
            if m[i][c]:
                sel = i
                break
        if sel is None:
            continue
        m[rk], m[sel] = m[sel], m[rk]
        inv = pow(m[rk][c], p - 2, p)
        m[rk] = [(x * inv) % p for x in m[rk]]
        for i in range(len(m)):
            if i != rk and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk

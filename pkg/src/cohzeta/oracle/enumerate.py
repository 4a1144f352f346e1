"""Canonical subspaces and enumeration of operator-invariant subspaces."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

import numpy as np

from ..partitions import Partition
from ._backend import kernel
from .modules import ModuleSpec

__all__ = [
    "DEFAULT_GUARD",
    "GuardExceeded",
    "Subspace",
    "default_guard",
    "echelon_estimate",
    "enumerate_submodules",
    "rank",
    "module_type",
    "cotype",
]

DEFAULT_GUARD = 10**7


def default_guard() -> int:
    """The guard from ``COHZETA_GUARD`` or ``DEFAULT_GUARD``."""
    return int(os.environ.get("COHZETA_GUARD", DEFAULT_GUARD))


class GuardExceeded(RuntimeError):
    """Enumeration stopped after examining more candidates than allowed."""

    def __init__(self, examined: int, guard: int, estimate: int):
        self.examined = examined
        self.guard = guard
        self.estimate = estimate
        super().__init__(
            f"examined {examined} candidate subspaces, above the guard {guard}; "
            f"the echelon search space has up to {estimate} candidates"
        )


def _gauss_binomial(n: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def echelon_estimate(dim: int, p: int, min_dim: int = 0, max_dim: int | None = None) -> int:
    """Number of all subspaces of ``F_p^dim`` with dimension in range."""
    hi = dim if max_dim is None else min(max_dim, dim)
    return sum(_gauss_binomial(dim, k, p) for k in range(max(min_dim, 0), hi + 1))


def rank(rows, p: int, dim: int) -> int:
    return kernel.rank([list(r) for r in rows], p, dim)


def _rref(rows, p: int, dim: int) -> tuple[tuple[int, ...], ...]:
    m = [[int(x) % p for x in r] for r in rows]
    rk = 0
    for c in range(dim):
        sel = next((i for i in range(rk, len(m)) if m[i][c]), None)
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
    # rows in increasing pivot order, as the kernel emits them
    return tuple(tuple(r) for r in m[:rk])


class Subspace:
    """A subspace of ``F_p^dim`` stored as its reduced row echelon basis."""

    __slots__ = ("p", "ambient", "basis")

    def __init__(self, rows, p: int, ambient: int, canonical: bool = False):
        self.p = p
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in rows) if canonical else _rref(rows, p, ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    def array(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, self.ambient)

    def image(self, mat: np.ndarray) -> np.ndarray:
        return (self.array() @ mat) % self.p

    def contains(self, other: "Subspace") -> bool:
        if other.dim > self.dim:
            return False
        return rank(self.basis + other.basis, self.p, self.ambient) == self.dim

    def is_invariant(self, mat: np.ndarray) -> bool:
        return rank(self.basis + tuple(map(tuple, self.image(mat))), self.p, self.ambient) == self.dim

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and (self.p, self.ambient, self.basis) == (
            other.p,
            other.ambient,
            other.basis,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, pivots={self.pivots})"


def _run(args):
    return kernel.dfs(*args)


def enumerate_submodules(
    M: ModuleSpec,
    guard: int | None = None,
    min_dim: int = 0,
    max_dim: int | None = None,
    workers: int = 1,
    split_depth: int = 3,
) -> Iterator[Subspace]:
    """Yield every subspace invariant under all generators of ``M``, once each.

    The order is canonical: a depth-first walk that decides pivot columns
    from the last to the first, visiting "no pivot" before "pivot" and the
    free entries in lexicographic order.  With ``workers > 1`` the walk is
    split at the top ``split_depth`` columns and the subtrees run in
    separate processes; concatenating their outputs in order reproduces the
    sequential order exactly.
    """
    guard = default_guard() if guard is None else guard
    dim, p = M.dim, M.p
    max_dim = dim if max_dim is None else max_dim
    ops = [list(map(list, g)) for g in M.ops]
    if workers <= 1 or dim <= split_depth:
        states, examined, aborted = kernel.dfs(
            ops, p, dim, dim - 1, 0, [], min_dim, max_dim, guard
        )
    else:
        stop = dim - split_depth
        roots, examined, aborted = kernel.dfs(
            ops, p, dim, dim - 1, stop, [], min_dim, max_dim, guard
        )
        states = []
        if not aborted:
            # each worker gets the full guard; totals are summed afterwards
            jobs = [(ops, p, dim, stop - 1, 0, list(r), min_dim, max_dim, guard) for r in roots]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part, n_examined, part_aborted in pool.map(_run, jobs):
                    examined += n_examined
                    aborted = aborted or part_aborted or examined > guard
                    states.extend(part)
    if aborted:
        raise GuardExceeded(examined, guard, echelon_estimate(dim, p, min_dim, max_dim))
    for rows in states:
        yield Subspace(rows, p, dim, canonical=True)


def _dims_of_powers(W: Subspace, mat: np.ndarray) -> list[int]:
    dims = [W.dim]
    cur = W.array()
    while dims[-1]:
        cur = (cur @ mat) % W.p
        dims.append(rank(cur.tolist(), W.p, W.ambient))
    return dims


def _from_conjugate_dims(dims: Sequence[int]) -> Partition:
    conj = [a - b for a, b in zip(dims, dims[1:]) if a - b]
    return Partition(conj).conjugate()


def module_type(W: Subspace, M: ModuleSpec, generator: str) -> Partition:
    """Type of ``W`` over ``F_p[u]`` where ``u`` is the named operator.

    ``lambda'_i = dim u^(i-1) W - dim u^i W``.
    """
    u = M.matrix(generator)
    if not W.is_invariant(u):
        raise ValueError(f"subspace is not invariant under {generator}")
    return _from_conjugate_dims(_dims_of_powers(W, u))


def cotype(W: Subspace, M: ModuleSpec, generator: str) -> Partition:
    """Type of ``M / W``, from ``dim(u^i M + W) - dim W``."""
    u = M.matrix(generator)
    if not W.is_invariant(u):
        raise ValueError(f"subspace is not invariant under {generator}")
    dims = []
    cur = np.eye(M.dim, dtype=np.int64)
    while True:
        d = rank(cur.tolist() + list(W.basis), M.p, M.dim) - W.dim
        dims.append(d)
        if d == 0:
            break
        cur = (cur @ u) % M.p
    return _from_conjugate_dims(dims)

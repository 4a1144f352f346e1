"""Brute-force counts that the closed formulas are checked against."""

from __future__ import annotations

import csv
import io
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, TextIO

from ..partitions import Partition
from .enumerate import (
    Subspace,
    cotype,
    enumerate_submodules,
    module_type,
    rank,
)
from .fields import FieldSpec, as_field
from .modules import (
    ModuleSpec,
    extension_space,
    hall_module,
    inert_m1_quotient,
    order_module,
)

__all__ = [
    "OracleResult",
    "hall_table",
    "hall_count_oracle",
    "moebius_oracle",
    "moebius_to_top",
    "saturation_zeta_oracle",
    "saturating_subspace_count_oracle",
    "quot_zeta_oracle_inert_m1",
    "CSV_COLUMNS",
    "write_csv",
]


@dataclass
class OracleResult:
    name: str
    params: dict[str, Any]
    value: Any
    seconds: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)


def hall_table(lam, q, guard: int | None = None) -> Counter:
    """``(type, cotype) -> count`` over all submodules of ``M(lam)``."""
    M = hall_module(lam, q)
    table: Counter = Counter()
    for W in enumerate_submodules(M, guard):
        table[(module_type(W, M, "T"), cotype(W, M, "T"))] += 1
    return table


def hall_count_oracle(lam, mu, q, guard: int | None = None) -> int:
    """Number of submodules of ``M(lam)`` of type ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    M = hall_module(lam, q)
    k = mu.size
    return sum(
        1
        for W in enumerate_submodules(M, guard, min_dim=k, max_dim=k)
        if module_type(W, M, "T") == mu
    )


def _moebius(elements: list[Subspace], top: Subspace) -> dict[Subspace, int]:
    # mu(x, top) by the recursion sum_{x <= z <= top} mu(z, top) = 0
    elements = sorted(elements, key=lambda s: -s.dim)
    mu: dict[Subspace, int] = {}
    for x in elements:
        if x == top:
            mu[x] = 1
            continue
        mu[x] = -sum(v for z, v in mu.items() if z.dim > x.dim and z.contains(x))
    return mu


def moebius_to_top(M: ModuleSpec, guard: int | None = None) -> dict[Subspace, int]:
    """``mu(W, M)`` for every submodule ``W``."""
    subs = list(enumerate_submodules(M, guard))
    top = Subspace([[int(i == j) for j in range(M.dim)] for i in range(M.dim)], M.p, M.dim)
    return _moebius(subs, top)


def moebius_oracle(M: ModuleSpec, W: Subspace, guard: int | None = None) -> int:
    """``mu(W, M)`` on the poset of submodules of ``M``."""
    for g in M.labels:
        if not W.is_invariant(M.matrix(g)):
            raise ValueError("W is not a submodule")
    above = [S for S in enumerate_submodules(M, guard, min_dim=W.dim) if S.contains(W)]
    top = Subspace([[int(i == j) for j in range(M.dim)] for i in range(M.dim)], M.p, M.dim)
    return _moebius(above, top)[W]


def _saturates(W: Subspace, mat, full: int) -> bool:
    rows = list(W.basis) + [tuple(r) for r in W.image(mat).tolist()]
    return rank(rows, W.p, W.ambient) == full


def saturation_zeta_oracle(family, n: int, q, guard: int | None = None) -> list[int]:
    """t-coefficients of the saturation zeta function by enumeration.

    Sums ``t^(codim W)`` over ``A``-submodules ``W`` of ``B^n`` with
    ``B W = B^n``.  The index is ``p^codim``, so the t-degree is the
    codimension over the prime field.
    """
    M = order_module(family.tag, family.m, n, q)
    b = M.matrix("b")
    coeffs = [0] * (M.dim + 1)
    for W in enumerate_submodules(M, guard):
        if _saturates(W, b, M.dim):
            coeffs[M.dim - W.dim] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _closure_interior_dims(W: Subspace, w) -> tuple[int, int]:
    # F_p-dimensions.  closure = W + wW.  interior = {x in W : wx in W}, which is
    # w-stable since w^2 = -a w - b; it is the kernel of W -> V/W, x -> wx.
    img = [tuple(r) for r in W.image(w).tolist()]
    closure = rank(list(W.basis) + img, W.p, W.ambient)
    image_mod_W = rank(list(W.basis) + img, W.p, W.ambient) - W.dim
    interior = W.dim - image_mod_W
    return closure, interior


def saturating_subspace_count_oracle(field_: "int | FieldSpec", n: int, r: int, guard: int | None = None) -> int:
    """Number of codimension-``r`` F_q-subspaces ``W`` of ``F_(q^2)^n`` with ``F_(q^2) W`` everything.

    Every enumerated ``W`` is also checked against
    ``dim(closure) + dim(interior) = dim W`` (dimensions over ``F_(q^2)``).
    """
    ext = as_field(field_, 2)
    M = extension_space(ext, n)
    if r < 0 or r > M.dim:
        return 0
    w = M.matrix("w")
    count = 0
    k = M.dim - r
    for W in enumerate_submodules(M, guard, min_dim=k, max_dim=k):
        closure, interior = _closure_interior_dims(W, w)
        if closure % 2 or interior % 2:
            raise AssertionError("closure or interior is not an F_(q^2)-subspace")
        if closure // 2 + interior // 2 != W.dim:
            raise AssertionError(f"closure/interior dimensions fail on {W!r}")
        if closure == M.dim:
            count += 1
    return count


def _quot_coeffs(n: int, K: int, q, guard) -> list[int]:
    M = inert_m1_quotient(n, K, q)
    coeffs = [0] * (K + 1)
    for W in enumerate_submodules(M, guard, min_dim=max(M.dim - K, 0)):
        coeffs[M.dim - W.dim] += 1
    return coeffs


def quot_zeta_oracle_inert_m1(q, n: int, K: int, guard: int | None = None, recheck: bool = True) -> list[int]:
    """Coefficients of ``t^0..t^K`` in the submodule zeta function of ``R^n``.

    Counts submodules of ``R^n / T^K R^n`` by codimension; a submodule of
    index ``q^j`` contains ``m^j R^n``, which contains ``T^K R^n`` when
    ``j <= K``.  With ``recheck`` the count is repeated at level ``K + 1``
    and the shared prefix must agree.
    """
    if n == 0:
        return [1] + [0] * K
    coeffs = _quot_coeffs(n, K, q, guard)
    if recheck:
        wider = _quot_coeffs(n, K + 1, q, guard)
        if wider[: K + 1] != coeffs:
            raise AssertionError(f"truncation level {K} is too small: {coeffs} vs {wider}")
    return coeffs


def timed(name: str, params: dict[str, Any], fn, *args, **kwargs) -> OracleResult:
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return OracleResult(name, params, value, time.perf_counter() - start)


CSV_COLUMNS = ("oracle", "params", "value", "seconds")


def write_csv(results: Iterable[OracleResult], out: TextIO | None = None, timing: bool = True) -> str:
    """Write results as CSV (columns fixed by ``CSV_COLUMNS``); returns the text."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS if timing else CSV_COLUMNS[:-1])
    for res in results:
        params = ";".join(f"{k}={res.params[k]}" for k in sorted(res.params))
        value = " ".join(map(str, res.value)) if isinstance(res.value, (list, tuple)) else str(res.value)
        row = [res.name, params, value]
        if timing:
            row.append(f"{res.seconds:.6f}")
        writer.writerow(row)
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text

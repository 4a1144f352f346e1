"""Hall polynomials and (finitized) Andrews-Gordon / Bressoud sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .laurent import (
    ONE,
    ZERO,
    PochFactor,
    QTFraction,
    QTLaurent,
    TSeries,
    monomial,
    qbinom,
)
from .partitions import Partition

__all__ = [
    "SumFamily",
    "g_skew",
    "hall_g",
    "decreasing_chains",
    "q_multinomial",
    "ag_multisum",
    "br_multisum",
    "singlesum",
    "infinite_sum",
    "product_side",
]


@dataclass(frozen=True)
class SumFamily:
    """``AG`` (modulus ``2m+3``) or ``Br`` (modulus ``2m+2``)."""

    tag: str
    m: int

    def __post_init__(self):
        if self.tag not in ("AG", "Br"):
            raise ValueError(f"unknown sum family {self.tag!r}")
        if self.m < 1:
            raise ValueError("m must be at least 1")

    @property
    def modulus(self) -> int:
        return 2 * self.m + 3 if self.tag == "AG" else 2 * self.m + 2

    def __str__(self) -> str:
        return f"{self.tag}(m={self.m})"


def _decreasing_nonneg(xs: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(xs, xs[1:])) and (not xs or xs[-1] >= 0)


@lru_cache(maxsize=None)
def _g_skew(r: tuple[int, ...], s: tuple[int, ...]) -> QTLaurent:
    if not (_decreasing_nonneg(r) and _decreasing_nonneg(s)):
        return ZERO
    if any(a < b for a, b in zip(r, s)):
        return ZERO
    m = len(r)
    s_ext = s + (0,)
    result = monomial(1, sum(si * (ri - si) for ri, si in zip(r, s)))
    for i in range(m):
        result = result * qbinom(r[i] - s_ext[i + 1], r[i] - s[i], -1)
        if not result:
            return ZERO
    return result


def g_skew(r: Sequence[int], s: Sequence[int]) -> QTLaurent:
    """``q^{sum s_i(r_i-s_i)} prod [r_i - s_{i+1} choose r_i - s_i]_{1/q}``.

    Returns zero outside the cone ``r, s`` weakly decreasing and nonnegative
    with ``r_i >= s_i``.
    """
    r, s = tuple(int(x) for x in r), tuple(int(x) for x in s)
    if len(r) != len(s):
        raise ValueError(f"tuples of different lengths: {r}, {s}")
    if not r:
        raise ValueError("tuples must be nonempty")
    return _g_skew(r, s)


def hall_g(lam: Sequence[int], mu: Sequence[int]) -> QTLaurent:
    """Number of submodules of type ``mu`` in ``M(lam)``, as a polynomial in q."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    m = max(lam.part(1), mu.part(1), 1)
    return g_skew(lam.conjugate_padded(m), mu.conjugate_padded(m))


def decreasing_chains(top: int, length: int, low: int = 0) -> Iterator[tuple[int, ...]]:
    """Tuples ``top >= x_1 >= ... >= x_length >= low``."""
    if length == 0:
        yield ()
        return
    for x in range(top, low - 1, -1):
        for rest in decreasing_chains(x, length - 1, low):
            yield (x,) + rest


def q_multinomial(chain: Sequence[int]) -> QTLaurent:
    """``(q;q)_{c0} / prod (q;q)_{c_{i-1}-c_i} (q;q)_{c_last}`` for a decreasing chain."""
    result = ONE
    for a, b in zip(chain, chain[1:]):
        result = result * qbinom(a, b)
    return result


def ag_multisum(m: int, n: int) -> QTLaurent:
    """``AG_n(q, t; 2m+3)`` as a polynomial in q and t."""
    _check_mn(m, n)
    total = ZERO
    for chain in decreasing_chains(n, m):
        w = q_multinomial((n,) + chain)
        total = total + w.scale_monomial(1, sum(x * x for x in chain), 2 * sum(chain))
    return total


def br_multisum(m: int, n: int, sign: int = 1) -> QTFraction:
    """``Br_n(q, sign*t; 2m+2)`` over the common denominator ``(-sign*t*q; q)_n``."""
    _check_mn(m, n)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    total = ZERO
    for chain in decreasing_chains(n, m):
        w = q_multinomial((n,) + chain)
        w = w.scale_monomial(1, sum(x * x for x in chain), 2 * sum(chain))
        # (-sign t q; q)_n / (-sign t q; q)_{n_m}
        for k in range(chain[-1], n):
            w = w + w.scale_monomial(sign, k + 1, 1)
        total = total + w
    return QTFraction(total, [PochFactor(monomial(-sign, 1, 1), 1, n)])


def singlesum(family: SumFamily, n: int) -> QTFraction:
    """The finitized single sum at ``t = 1``.

    ``(q;q)_n sum_r (-1)^r q^{e(r)} / ((q;q)_{n-r} (q;q)_{n+r})`` is returned
    as ``sum_r (-1)^r q^{e(r)} [2n choose n+r] / (q^{n+1}; q)_n``.
    """
    _check_mn(family.m, n)
    m = family.m
    total = ZERO
    for r in range(-n, n + 1):
        e = (m + 1) * r * r
        if family.tag == "AG":
            e += r * (r - 1) // 2
        total = total + qbinom(2 * n, n + r).scale_monomial(-1 if r % 2 else 1, e)
    return QTFraction(total, [PochFactor(monomial(1, n + 1), 1, n)])


def _check_mn(m: int, n: int) -> None:
    if m < 1:
        raise ValueError("m must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")


# -- truncated integer power series in q ----------------------------------


def _mul_trunc(a: list[int], b: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(N + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _div_one_minus(a: list[int], e: int, N: int) -> list[int]:
    # a / (1 - q^e): running sums along residue classes mod e
    out = list(a)
    for i in range(e, N + 1):
        out[i] += out[i - e]
    return out


def _times_one_minus(a: list[int], e: int, N: int) -> list[int]:
    out = list(a)
    for i in range(N, e - 1, -1):
        out[i] -= a[i - e]
    return out


def _inv_poch(start: int, step: int, length: int, N: int) -> list[int]:
    """``1 / prod_{k<length} (1 - q^{start + k*step})`` truncated at ``N``."""
    out = [1] + [0] * N
    for k in range(length):
        e = start + k * step
        if e > N:
            break
        out = _div_one_minus(out, e, N)
    return out


def infinite_sum(family: SumFamily, N: int) -> TSeries:
    """The ``n -> infinity`` multi-sum, truncated after ``q^N``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    m = family.m
    total = [0] * (N + 1)

    def rec(prefix: tuple[int, ...], cap: int, weight: int):
        if len(prefix) == m:
            gaps = [a - b for a, b in zip(prefix, prefix[1:])]
            term = [0] * (N + 1)
            term[weight] = 1
            for g in gaps:
                term = _mul_trunc(term, _inv_poch(1, 1, g, N), N)
            last = prefix[-1]
            if family.tag == "AG":
                term = _mul_trunc(term, _inv_poch(1, 1, last, N), N)
            else:
                term = _mul_trunc(term, _inv_poch(2, 2, last, N), N)
            for i in range(N + 1):
                total[i] += term[i]
            return
        # remaining parts are <= x, so the minimum extra weight is 0
        x = 0
        while x <= cap and weight + x * x <= N:
            rec(prefix + (x,), x, weight + x * x)
            x += 1

    rec((), N, 0)
    return TSeries.from_ints(total, N)


def product_side(family: SumFamily, N: int) -> TSeries:
    """The infinite-product side, expanded and truncated after ``q^N``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    m = family.m
    M = family.modulus
    if family.tag == "AG":
        starts = (m + 1, m + 2, M)
    else:
        starts = (m + 1, m + 1, M)
    series = [1] + [0] * N
    for a in starts:
        e = a
        while e <= N:
            series = _times_one_minus(series, e, N)
            e += M
    for k in range(1, N + 1):
        series = _div_one_minus(series, k, N)
    return TSeries.from_ints(series, N)

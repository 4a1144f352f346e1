"""Zeta functions of the ramified, split and inert quadratic orders.

Two routes are kept apart on purpose.  ``saturation_zeta`` runs the Moebius
inversion engine (sum over cotype ``(1^r)`` submodules of ``B^n``, then over
all ``A``-submodules of each, using a descent rule for the ``B -> A`` type
change).  ``rtilde_zeta`` evaluates the closed multi-sums in the ``G``
notation directly.  Tests equate the two.

Variables: ``t = q^{-s}``.  The finitized functions ``coh_*`` and ``nuhat_*``
live in the shifted variable (``s -> s + n``) and are naturally written in
``q^{-1}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, NamedTuple, Sequence

from .identity import IdentityResult, first_difference
from .laurent import (
    ONE,
    ZERO,
    PochFactor,
    QTFraction,
    QTLaurent,
    T,
    divide_by_binomial,
    monomial,
    poch,
    qbinom,
    substitute,
)
from .partitions import Partition, column, rectangle, subpartitions
from .qseries import (
    SumFamily,
    ag_multisum,
    br_multisum,
    decreasing_chains,
    g_skew,
    hall_g,
    singlesum,
)

__all__ = [
    "OrderFamily",
    "DescentRule",
    "ClosedForm",
    "key_lemma",
    "saturation_zeta",
    "rtilde_numerator",
    "rtilde_zeta",
    "solomon_zeta",
    "nakayama_compose",
    "coh_finitized",
    "coh_via_nakayama",
    "closed_form_coh",
    "nuhat_zero",
    "nuhat_zero_prediction",
    "normalize_nuhat",
    "reflection_check",
    "inert_m1_count",
]

FAMILIES = ("ramified", "split", "inert")


def _c2(x: int) -> int:
    return x * (x - 1) // 2


@dataclass(frozen=True)
class OrderFamily:
    """One of ``R_{2,2m+1}`` (ramified), ``R_{2,2m}`` (split), ``R'_{2,2m}`` (inert)."""

    tag: str
    m: int

    def __post_init__(self):
        tag = self.tag.lower()
        if tag not in FAMILIES:
            raise ValueError(f"unknown order family {self.tag!r}; expected one of {FAMILIES}")
        object.__setattr__(self, "tag", tag)
        if self.m < 1:
            raise ValueError("m must be at least 1")

    @property
    def d(self) -> int:
        """``|R~/R| = q^d``."""
        return self.m

    @property
    def residue_exponents(self) -> tuple[int, ...]:
        """Residue field sizes ``q^e`` of the DVR factors of the normalization."""
        return {"ramified": (1,), "split": (1, 1), "inert": (2,)}[self.tag]

    def __str__(self) -> str:
        return f"{self.tag}(m={self.m})"


class DescentRule(enum.Enum):
    """How the type of a ``B``-module reads as an ``A``-module."""

    HALF_SPLIT = "half_split"
    CONCAT = "concat"
    DUPLICATE = "duplicate"

    def apply(self, mus: Sequence[Partition]) -> Partition:
        if self is DescentRule.CONCAT:
            a, b = mus
            return Partition(a).concat(Partition(b))
        (mu,) = mus
        mu = Partition(mu)
        return mu.half_split() if self is DescentRule.HALF_SPLIT else mu.duplicate()


class ClosedForm(NamedTuple):
    value: QTFraction
    conjectural: bool


# -- Moebius-inversion engine ---------------------------------------------


@lru_cache(maxsize=None)
def _submodule_profile(nu: Partition) -> dict[int, QTLaurent]:
    """``{|rho|: sum_rho g^nu_rho(q)}`` over all types ``rho`` of submodules."""
    prof: dict[int, QTLaurent] = {}
    for rho in subpartitions(nu):
        g = hall_g(nu, rho)
        if g:
            k = rho.size
            prof[k] = prof.get(k, ZERO) + g
    return prof


def _in_base(p: QTLaurent, e: int) -> QTLaurent:
    return p if e == 1 else substitute(p, "q", monomial(1, e))


def key_lemma(
    shapes: Sequence[tuple[int, int, int]], descent: DescentRule, a_exponent: int = 1
) -> QTLaurent:
    """Saturation zeta of ``M_B(lambda)`` for ``A`` inside a product of DVR quotients.

    ``shapes`` lists, per factor ``B_i`` of ``B``, the rectangle ``(m_i^n_i)``
    giving the type of the module and the residue exponent ``e_i`` with
    ``q_{B_i} = q^{e_i}``, as ``(m_i, n_i, e_i)``.  Only cotype ``(1^r)``
    submodules carry a Moebius weight, and in a rectangle their type is the
    complement of ``(1^r)``.
    """
    size_exp = sum(m * n * e for m, n, e in shapes)
    per_factor = []
    for m, n, e in shapes:
        lam = rectangle(m, n)
        options = []
        for r in range(0, n + 1):
            mu = column(r).complement(m, n) if m else Partition()
            weight = _in_base(hall_g(lam, mu), e).scale_monomial(-1 if r % 2 else 1, e * _c2(r))
            if weight:
                options.append((mu, weight))
        per_factor.append(options)

    total = ZERO

    def rec(i: int, mus: list[Partition], weight: QTLaurent):
        nonlocal total
        if i == len(per_factor):
            nu = descent.apply(mus)
            for k, g in _submodule_profile(nu).items():
                total = total + (weight * _in_base(g, a_exponent)).scale_monomial(
                    1, 0, size_exp - a_exponent * k
                )
            return
        for mu, w in per_factor[i]:
            rec(i + 1, mus + [mu], weight * w)

    rec(0, [], ONE)
    return total


def saturation_zeta(family: OrderFamily, n: int) -> QTLaurent:
    """``eps_{B^n}^{A in B}`` for the conductor quotients of ``family``."""
    _check_n(n)
    m = family.m
    if family.tag == "ramified":
        return key_lemma([(2 * m, n, 1)], DescentRule.HALF_SPLIT)
    if family.tag == "split":
        return key_lemma([(m, n, 1), (m, n, 1)], DescentRule.CONCAT)
    return key_lemma([(m, n, 2)], DescentRule.DUPLICATE)


# -- closed multi-sums in the G notation ----------------------------------


@lru_cache(maxsize=None)
def _g_profile(r: tuple[int, ...]) -> dict[int, QTLaurent]:
    """``{|s|: sum_s G^r_s(q)}`` over the cone where ``G^r_s`` can be nonzero."""
    prof: dict[int, QTLaurent] = {}
    m = len(r)

    def rec(prefix: tuple[int, ...], cap: int):
        i = len(prefix)
        if i == m:
            g = g_skew(r, prefix)
            if g:
                k = sum(prefix)
                prof[k] = prof.get(k, ZERO) + g
            return
        for x in range(min(cap, r[i]), -1, -1):
            rec(prefix + (x,), x)

    rec((), r[0])
    return prof


def _r_tuple(m: int, n: int, last_drop: int) -> tuple[int, ...]:
    return (2 * n,) * (m - 1) + (2 * n - last_drop,)


def _rtilde_outer(family: OrderFamily, n: int):
    """Yield ``(weight, G upper index)`` pairs of the outer sum."""
    m = family.m
    if family.tag == "ramified":
        for r in range(n + 1):
            w = qbinom(n, r).scale_monomial(-1 if r % 2 else 1, _c2(r))
            yield w, _r_tuple(m, n, r)
    elif family.tag == "split":
        for r1 in range(n + 1):
            for r2 in range(n + 1):
                w = (qbinom(n, r1) * qbinom(n, r2)).scale_monomial(
                    -1 if (r1 + r2) % 2 else 1, _c2(r1) + _c2(r2)
                )
                yield w, _r_tuple(m, n, r1 + r2)
    else:
        for r in range(n + 1):
            w = qbinom(n, r, 2).scale_monomial(-1 if r % 2 else 1, r * r - r)
            yield w, _r_tuple(m, n, 2 * r)


def rtilde_numerator(family: OrderFamily, n: int) -> QTLaurent:
    """Right-hand side of the closed formula for ``zeta_{R~^n}^R`` (times its denominator)."""
    _check_n(n)
    top = 2 * family.m * n
    total = ZERO
    for w, r in _rtilde_outer(family, n):
        for k, g in _g_profile(r).items():
            total = total + (w * g).scale_monomial(1, 0, top - k)
    return total


def _rtilde_den(family: OrderFamily, n: int) -> list[PochFactor]:
    if family.tag == "ramified":
        return [PochFactor(T, 1, n)]
    if family.tag == "split":
        return [PochFactor(T, 1, n), PochFactor(T, 1, n)]
    return [PochFactor(T**2, 2, n)]


def rtilde_zeta(family: OrderFamily, n: int) -> QTFraction:
    """``zeta_{R~^n}^R(s)`` as numerator over ``(t;q)_n``, ``(t;q)_n^2`` or ``(t^2;q^2)_n``."""
    return QTFraction(rtilde_numerator(family, n), _rtilde_den(family, n))


def solomon_zeta(residue_exponents: Sequence[int], n: int) -> QTFraction:
    """``prod_i 1 / (t^{e_i}; q^{e_i})_n`` for a product of DVRs."""
    _check_n(n)
    if any(e < 1 for e in residue_exponents):
        raise ValueError("residue exponents must be positive")
    return QTFraction(ONE, [PochFactor(T**e, e, n) for e in residue_exponents])


def nakayama_compose(sub_zetas: Mapping[int, QTFraction], n: int) -> QTFraction:
    """``sum_r [n,r]_q t^r Z_r(t -> q^{n-r} t)`` with ``Z_r = zeta_{m R^r}^R``."""
    _check_n(n)
    missing = [r for r in range(n + 1) if r not in sub_zetas]
    if missing:
        raise KeyError(f"sub-zeta functions missing for r = {missing}")
    terms = []
    for r in range(n + 1):
        z = sub_zetas[r]
        z = z if isinstance(z, QTFraction) else QTFraction(z)
        shifted = z.substitute("t", monomial(1, n - r, 1)) if n != r else z
        terms.append(shifted * qbinom(n, r).scale_monomial(1, 0, r))
    return QTFraction.sum(terms)


# -- the m = 1 inert order -------------------------------------------------


def _require_inert_m1(family: OrderFamily | None) -> None:
    if family is not None and (family.tag != "inert" or family.m != 1):
        raise ValueError(f"no closed finitized formula in scope for {family}; only inert m=1")


def _poch_ratio(i: int, j: int) -> QTLaurent:
    """``(q^{2i}; q^{-2})_j / (q^{-1}; q^{-1})_j`` by exact division."""
    num = poch(monomial(1, 2 * i), -2, j)
    for k in range(j):
        num = divide_by_binomial(num, monomial(1, -1 - k))
    return num


def coh_finitized(n: int, family: OrderFamily | None = None) -> QTFraction:
    """Finitized Coh zeta function of ``R'_{2,2}`` as a double sum over ``i >= j >= 0``.

    Every term is placed over ``(t^2 q^{-2}; q^{-2})_n``.
    """
    _require_inert_m1(family)
    _check_n(n)
    total = ZERO
    for i in range(n + 1):
        # (t^2q^-2;q^-2)_n / (t^2q^-2;q^-2)_i
        fill = poch(monomial(1, -2 - 2 * i, 2), -2, n - i)
        outer = qbinom(n, i, -1) * fill
        for j in range(i + 1):
            c = _poch_ratio(i, j)
            if not c:
                continue
            total = total + (outer * c).scale_monomial(
                -1 if j % 2 else 1, -(i * i + i * j + j), i + j
            )
    return QTFraction(total, [PochFactor(monomial(1, -2, 2), -2, n)])


def coh_via_nakayama(n: int) -> QTFraction:
    """``hat-zeta_{R'_{2,2}, n}`` rebuilt from ``zeta_{R~^r}^R`` through Nakayama.

    Uses ``m R ~= R~`` for ``m = 1`` and the final shift ``s -> s + n``.
    """
    fam = OrderFamily("inert", 1)
    subs = {r: rtilde_zeta(fam, r) for r in range(n + 1)}
    z = nakayama_compose(subs, n)
    return z.substitute("t", monomial(1, -n, 1)) if n else z


def closed_form_coh(family: OrderFamily, n: int) -> ClosedForm:
    """``AG``/``Br`` closed forms at ``q -> 1/q`` over ``(t q^{-1}; q^{-1})_n``.

    Ramified and split are theorems; the inert form is conjectural and is
    flagged as such.
    """
    _check_n(n)
    qinv = monomial(1, -1)
    pref = PochFactor(monomial(1, -1, 1), -1, n)
    m = family.m
    if family.tag == "ramified":
        num = substitute(ag_multisum(m, n), "q", qinv)
        return ClosedForm(QTFraction(num, [pref]), False)
    sign = -1 if family.tag == "split" else 1
    br = br_multisum(m, n, sign).substitute("q", qinv)
    return ClosedForm(QTFraction(br.num, br.den + (pref,)), family.tag == "inert")


# -- s = 0 -----------------------------------------------------------------


def _nuhat_theorem(family: OrderFamily, n: int) -> QTLaurent:
    total = ZERO
    for w, r in _rtilde_outer(family, n):
        for g in _g_profile(r).values():
            total = total + w * g
    return total.scale_monomial(1, -family.m * n * n)


def _nuhat_alternative(family: OrderFamily, n: int) -> QTLaurent:
    m = family.m
    total = ZERO
    chains = list(decreasing_chains(n, m, -n))
    if family.tag == "ramified":
        outer = [((r,), r, qbinom(n, r, -1), 0) for r in range(n + 1)]
    elif family.tag == "split":
        outer = [
            ((r1, r2), r1 + r2, qbinom(n, r1, -1) * qbinom(n, r2, -1), r1 * r2)
            for r1 in range(n + 1)
            for r2 in range(n + 1)
        ]
    else:
        outer = [((r,), r, qbinom(n, r, -2), 0) for r in range(n + 1)]
    for _, R, w, extra in outer:
        sign = -1 if R % 2 else 1
        for s in chains:
            s1 = s[0]
            tail = -sum(x * x for x in s[1:])
            if family.tag == "inert":
                b = qbinom(2 * n - 2 * R, n - s1, -1)
                e = -R - (s1 - R) ** 2 + tail
            else:
                b = qbinom(2 * n - R, n - R + s1, -1)
                e = -(_c2(s1) + _c2(R - s1) + R) + tail + extra
            if not b:
                continue
            # (q^-1;q^-1)_{n+s_1} / [(q^-1;q^-1)_{n+s_m} prod (q^-1;q^-1)_{s_k-s_{k+1}}]
            mult = ONE
            for k in range(m - 1):
                mult = mult * qbinom(n + s[k], s[k] - s[k + 1], -1)
            total = total + (w * b * mult).scale_monomial(sign, e)
    return total


def nuhat_zero(family: OrderFamily, n: int, form: str = "theorem") -> QTLaurent:
    """Normalized finitized Coh zeta function at ``s = 0``.

    ``form='theorem'`` sums the ``G`` formula and rescales by ``q^{-m n^2}``;
    ``form='alternative'`` sums the rewritten multi-sum in ``q^{-1}``.
    """
    _check_n(n)
    if form == "theorem":
        return _nuhat_theorem(family, n)
    if form == "alternative":
        return _nuhat_alternative(family, n)
    raise ValueError(f"unknown form {form!r}")


def nuhat_zero_prediction(family: OrderFamily, n: int) -> QTFraction:
    """The value of ``nuhat(0)`` predicted by the ``AG``/``Br`` closed forms.

    Ramified: ``AG_n(1/q, 1)``.  Split: ``1``.  Inert (conjectural):
    ``(-1/q; 1/q)_n Br_n(1/q, 1)``.
    """
    qinv = monomial(1, -1)
    if family.tag == "ramified":
        return singlesum(SumFamily("AG", family.m), n).substitute("q", qinv)
    if family.tag == "split":
        return QTFraction(ONE)
    br = singlesum(SumFamily("Br", family.m), n).substitute("q", qinv)
    return br * poch(monomial(-1, -1), -1, n)


def normalize_nuhat(z: QTFraction, family: OrderFamily, n: int) -> QTLaurent:
    """``nuhat = z * prod_e (t^e q^{-e}; q^{-e})_n`` as an exact Laurent polynomial.

    Raises ``NonPolynomialError`` if the denominator of ``z`` does not cancel.
    """
    z = z if isinstance(z, QTFraction) else QTFraction(z)
    num = z.num
    for e in family.residue_exponents:
        num = num * poch(monomial(1, -e, e), -e, n)
    return QTFraction(num, z.den).to_laurent()


def reflection_check(nu: QTLaurent, n: int, d: int) -> IdentityResult:
    """Check ``nu(t) = q^{-d n^2} t^{2 n d} nu(q^n / t)`` exactly."""
    nu = QTLaurent.coerce(nu)
    mirrored = substitute(nu, "t", monomial(1, n, -1)).scale_monomial(1, -d * n * n, 2 * n * d)
    w = first_difference(nu - mirrored)
    return IdentityResult(w is None, w)


def inert_m1_count(n: int, r: int, form: str = "closed") -> QTLaurent:
    """Number of codimension-``r`` ``F_q``-subspaces ``W`` of ``F_{q^2}^n`` with ``F_{q^2} W`` everything.

    ``closed``: ``q^{C(r,2)} (q^{2n}; q^{-2})_r / (q;q)_r``, realized as
    ``q^{C(r,2)} [n,r]_q prod_{a=n-r+1}^{n} (1 + q^a)``.
    ``alternating``: the inclusion-exclusion sum over ``F_{q^2}``-subspaces.
    """
    _check_n(n)
    if form == "closed":
        if r < 0 or r > n:
            return ZERO
        result = qbinom(n, r).scale_monomial(1, _c2(r))
        for a in range(n - r + 1, n + 1):
            result = result + result.scale_monomial(1, a)
        return result
    if form == "alternating":
        total = ZERO
        for i in range(n + 1):
            b = qbinom(2 * n - 2 * i, 2 * n - r)
            if b:
                total = total + (qbinom(n, i, 2) * b).scale_monomial(-1 if i % 2 else 1, i * i - i)
        return total
    raise ValueError(f"unknown form {form!r}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")

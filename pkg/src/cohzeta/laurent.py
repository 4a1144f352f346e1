"""Exact Laurent polynomials in two variables ``q`` and ``t``.

Everything else in the package is built on three value types:

``QTLaurent``
    finite sums ``c * q**a * t**b`` with arbitrary-precision integer ``c``
    and (possibly negative) integer exponents.
``QTFraction``
    a ``QTLaurent`` numerator over a product of q-Pochhammer factors
    ``(base; q**step)_length``.  Fractions are never reduced; equality is
    decided by cross-multiplication.
``TSeries``
    a power series truncated at an explicit order, used for coefficient-wise
    comparisons (in ``t`` with Laurent-in-``q`` coefficients, or in ``q`` with
    integer coefficients).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "QTLaurent",
    "PochFactor",
    "QTFraction",
    "TSeries",
    "NonPolynomialError",
    "Q",
    "T",
    "ONE",
    "ZERO",
    "monomial",
    "poch",
    "qbinom",
    "substitute",
    "divide_by_binomial",
]

# exponents are plain ints; keep them in machine range so serialized output
# stays portable
MAX_EXPONENT = 2**62

Scalar = Union[int, "QTLaurent"]


class NonPolynomialError(ArithmeticError):
    """An exact division left a nonzero remainder."""


class QTLaurent:
    """Laurent polynomial in ``q`` and ``t`` with integer coefficients.

    Terms are stored as a mapping ``(e_q, e_t) -> coefficient`` with no zero
    coefficients, so structural equality is mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        if terms:
            self._terms = {k: int(c) for k, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QTLaurent":
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "QTLaurent":
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def coerce(cls, x: Scalar) -> "QTLaurent":
        if isinstance(x, QTLaurent):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as QTLaurent")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in canonical order: lexicographic by ``(e_t, e_q)``."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, e_q: int, e_t: int = 0) -> int:
        return self._terms.get((e_q, e_t), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_pure_q(self) -> bool:
        return all(b == 0 for (_, b) in self._terms)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def t_degrees(self) -> tuple[int, int]:
        """(min, max) exponent of ``t``; raises on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        es = [b for (_, b) in self._terms]
        return min(es), max(es)

    def q_degrees(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        es = [a for (a, _) in self._terms]
        return min(es), max(es)

    def t_coefficients(self) -> dict[int, "QTLaurent"]:
        """Split into ``{e_t: pure-q coefficient}``."""
        out: dict[int, dict] = {}
        for (a, b), c in self._terms.items():
            out.setdefault(b, {})[(a, 0)] = c
        return {b: QTLaurent._raw(d) for b, d in sorted(out.items())}

    def q_coefficients(self) -> dict[int, int]:
        """Integer coefficients of a pure-q polynomial, keyed by q-exponent."""
        if not self.is_pure_q():
            raise ValueError("polynomial involves t")
        return {a: c for (a, _), c in sorted(self._terms.items())}

    def leading_nonneg(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "QTLaurent":
        return QTLaurent._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "QTLaurent":
        return self

    def __add__(self, other: Scalar) -> "QTLaurent":
        if isinstance(other, int):
            other = QTLaurent.const(other)
        elif not isinstance(other, QTLaurent):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        res = dict(big)
        for k, c in small.items():
            v = res.get(k, 0) + c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return QTLaurent._raw(res)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "QTLaurent":
        if isinstance(other, int):
            other = QTLaurent.const(other)
        elif not isinstance(other, QTLaurent):
            return NotImplemented
        res = dict(self._terms)
        for k, c in other._terms.items():
            v = res.get(k, 0) - c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return QTLaurent._raw(res)

    def __rsub__(self, other: Scalar) -> "QTLaurent":
        return QTLaurent.coerce(other) - self

    def __mul__(self, other: Scalar) -> "QTLaurent":
        if isinstance(other, int):
            if not other:
                return ZERO
            return QTLaurent._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, QTLaurent):
            return NotImplemented
        a_terms, b_terms = self._terms, other._terms
        if not a_terms or not b_terms:
            return ZERO
        if len(a_terms) < len(b_terms):
            a_terms, b_terms = b_terms, a_terms
        _check_exponents(a_terms, b_terms)
        if len(b_terms) == 1:
            ((bq, bt), bc), = b_terms.items()
            return QTLaurent._raw({(aq + bq, at + bt): ac * bc for (aq, at), ac in a_terms.items()})
        res: dict[tuple[int, int], int] = {}
        get = res.get
        b_items = list(b_terms.items())
        for (aq, at), ac in a_terms.items():
            for (bq, bt), bc in b_items:
                k = (aq + bq, at + bt)
                res[k] = get(k, 0) + ac * bc
        return QTLaurent._raw({k: c for k, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QTLaurent":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            ((a, b), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return QTLaurent._raw({(a * k, b * k): c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale_monomial(self, c: int, e_q: int, e_t: int = 0) -> "QTLaurent":
        """``self * c * q**e_q * t**e_t`` without building the monomial."""
        if not c:
            return ZERO
        return QTLaurent._raw({(a + e_q, b + e_t): v * c for (a, b), v in self._terms.items()})

    # -- equality / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QTLaurent.const(other)
        if isinstance(other, QTLaurent):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------

    def evaluate(self, q: int | Fraction | None = None, t: int | Fraction | None = None):
        """Specialize ``q`` and/or ``t`` to rational numbers.

        With both given, returns a ``Fraction``.  With one given, returns a
        ``QTLaurent`` in the remaining variable (the specialized value must
        then be an integer, or ``+-1`` when negative exponents occur).
        """
        if q is not None and t is not None:
            q, t = Fraction(q), Fraction(t)
            return sum((c * q**a * t**b for (a, b), c in self._terms.items()), Fraction(0))
        if q is None and t is None:
            return self
        res: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            if q is not None:
                v, key = _int_power(q, a), (0, b)
            else:
                v, key = _int_power(t, b), (a, 0)
            res[key] = res.get(key, 0) + c * v
        return QTLaurent(res)

    def at_t1(self) -> "QTLaurent":
        return self.evaluate(t=1)

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"QTLaurent({self})"

    def __str__(self) -> str:
        return format_laurent(self)


def _int_power(x, e: int) -> int:
    x = Fraction(x)
    v = x**e
    if v.denominator != 1:
        raise ValueError(f"specialization {x}**{e} is not an integer; use two-variable evaluate")
    return int(v)


def _check_exponents(a: dict, b: dict) -> None:
    ma = max(max(abs(x), abs(y)) for (x, y) in a)
    mb = max(max(abs(x), abs(y)) for (x, y) in b)
    if ma + mb >= MAX_EXPONENT:
        raise OverflowError("Laurent exponent out of range")


def format_laurent(p: QTLaurent, qname: str = "q", tname: str = "t") -> str:
    if not p._terms:
        return "0"
    pieces = []
    for (a, b), c in p.items():
        mono = []
        if a:
            mono.append(qname if a == 1 else f"{qname}^{a}")
        if b:
            mono.append(tname if b == 1 else f"{tname}^{b}")
        body = "*".join(mono)
        if not body:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(body)
        elif c == -1:
            pieces.append("-" + body)
        else:
            pieces.append(f"{c}*{body}")
    out = pieces[0]
    for s in pieces[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


ZERO = QTLaurent._raw({})
ONE = QTLaurent._raw({(0, 0): 1})
Q = QTLaurent._raw({(1, 0): 1})
T = QTLaurent._raw({(0, 1): 1})


def monomial(c: int = 1, e_q: int = 0, e_t: int = 0) -> QTLaurent:
    return QTLaurent._raw({(e_q, e_t): c} if c else {})


def _as_monomial(m: Scalar) -> tuple[int, int, int]:
    m = QTLaurent.coerce(m)
    if not m.is_monomial():
        raise ValueError(f"expected a single-term monomial, got {m}")
    ((a, b), c), = m._terms.items()
    return c, a, b


# -- substitution ---------------------------------------------------------


def substitute(p: Scalar, var: str, image: Scalar) -> QTLaurent:
    """Replace ``var`` by a monomial ``image``.

    ``q`` may only be sent to ``+-q**k`` with ``k != 0``; ``t`` may be sent to
    any unit monomial ``+-q**a * t**b`` (e.g. ``t -> q**n / t``).
    """
    p = QTLaurent.coerce(p)
    c, a, b = _as_monomial(image)
    if c not in (1, -1):
        raise ValueError("substitution image must have coefficient +-1")
    res: dict[tuple[int, int], int] = {}
    if var == "q":
        if b != 0 or a == 0:
            raise ValueError("q may only be replaced by a nonconstant power of q")
        for (eq, et), v in p._terms.items():
            k = (eq * a, et)
            res[k] = res.get(k, 0) + v * c ** abs(eq)
    elif var == "t":
        for (eq, et), v in p._terms.items():
            k = (eq + a * et, b * et)
            sign = c ** abs(et)
            res[k] = res.get(k, 0) + v * sign
    else:
        raise ValueError(f"unknown variable {var!r}")
    return QTLaurent(res)


# -- exact division -------------------------------------------------------


def divide_by_binomial(f: QTLaurent, m: Scalar) -> QTLaurent:
    """Exact quotient ``f / (1 - m)`` for a nonconstant monomial ``m``.

    Raises ``NonPolynomialError`` when ``1 - m`` does not divide ``f``.
    """
    c, a, b = _as_monomial(m)
    if a == 0 and b == 0:
        raise ValueError("cannot divide by 1 - constant")
    # a monomial order in which m is positive: first key is a linear
    # functional with positive value on m, ties broken lexicographically
    if b:
        sign = 1 if b > 0 else -1

        def key(e):
            return (sign * e[1], e[0], e[1])
    else:
        sign = 1 if a > 0 else -1

        def key(e):
            return (sign * e[0], e[1], e[0])

    rem = dict(f._terms)
    if not rem:
        return ZERO
    top = max(key(e) for e in rem)[0] - key((a, b))[0]
    quot: dict[tuple[int, int], int] = {}
    while rem:
        e = min(rem, key=key)
        if key(e)[0] > top:
            raise NonPolynomialError(f"1 - ({monomial(c, a, b)}) does not divide the numerator")
        v = rem.pop(e)
        quot[e] = quot.get(e, 0) + v
        e2 = (e[0] + a, e[1] + b)
        w = rem.get(e2, 0) + v * c
        if w:
            rem[e2] = w
        else:
            rem.pop(e2, None)
    return QTLaurent(quot)


# -- Pochhammer symbols and q-binomials -----------------------------------


def poch(base: Scalar, step: int, n: int) -> QTLaurent:
    """``(base; q**step)_n = prod_{k<n} (1 - base * q**(step*k))``."""
    if n < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    c, a, b = _as_monomial(base)
    result = ONE
    for k in range(n):
        result = result - result.scale_monomial(c, a + step * k, b)
    return result


@lru_cache(maxsize=None)
def _qbinom_q(n: int, k: int) -> QTLaurent:
    # Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return _qbinom_q(n - 1, k - 1) + _qbinom_q(n - 1, k).scale_monomial(1, k)


def _warm(n: int) -> None:
    # fill the cache bottom-up so deep rows never hit the recursion limit
    for i in range(0, n + 1, 64):
        for k in range(0, i + 1):
            _qbinom_q(i, k)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int, base_exp: int = 1) -> QTLaurent:
    """Gaussian binomial ``[n choose k]`` in the variable ``q**base_exp``.

    Zero when ``k < 0`` or ``k > n`` (which covers negative ``n``).
    """
    if base_exp == 0:
        raise ValueError("base exponent must be nonzero")
    if k < 0 or k > n:
        return ZERO
    if n > 200:
        _warm(n)
    p = _qbinom_q(n, k)
    if base_exp == 1:
        return p
    return QTLaurent._raw({(a * base_exp, 0): c for (a, _), c in p._terms.items()})


# -- fractions ------------------------------------------------------------


class PochFactor(NamedTuple):
    """The denominator factor ``(base; q**step)_length``."""

    base: QTLaurent
    step: int
    length: int

    def expand(self) -> QTLaurent:
        return poch(self.base, self.step, self.length)

    def sort_key(self):
        ((a, b), c), = self.base._terms.items()
        return (b, a, c, self.step, self.length)

    def binomials(self) -> Iterator[QTLaurent]:
        """The monomials ``m`` with factor ``= prod (1 - m)``."""
        c, a, b = _as_monomial(self.base)
        for k in range(self.length):
            yield monomial(c, a + self.step * k, b)

    def substitute(self, var: str, image: QTLaurent) -> "PochFactor":
        base = substitute(self.base, var, image)
        if var == "q":
            c, a, _ = _as_monomial(image)
            if c != 1:
                raise ValueError("q -> -q**k does not preserve Pochhammer factors")
            return PochFactor(base, self.step * a, self.length)
        return PochFactor(base, self.step, self.length)


def _factor(base: Scalar, step: int, length: int) -> PochFactor:
    base = QTLaurent.coerce(base)
    _as_monomial(base)
    if step == 0:
        raise ValueError("Pochhammer step must be nonzero")
    if length < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    return PochFactor(base, int(step), int(length))


class QTFraction:
    """``num / prod(den)`` with ``den`` a sorted tuple of ``PochFactor``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar, den: Iterable[PochFactor | tuple] = ()):
        self.num = QTLaurent.coerce(num)
        factors = [f if isinstance(f, PochFactor) else _factor(*f) for f in den]
        self.den = tuple(sorted((f for f in factors if f.length), key=PochFactor.sort_key))

    @classmethod
    def over(cls, num: Scalar, *factors: tuple) -> "QTFraction":
        return cls(num, [_factor(*f) for f in factors])

    def expand_den(self) -> QTLaurent:
        result = ONE
        for f in self.den:
            result = result * f.expand()
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, QTLaurent)):
            other = QTFraction(other)
        if not isinstance(other, QTFraction):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.expand_den() == other.num * self.expand_den()

    __hash__ = None  # equality is not structural

    def __mul__(self, other) -> "QTFraction":
        if isinstance(other, (int, QTLaurent)):
            return QTFraction(self.num * other, self.den)
        if isinstance(other, QTFraction):
            return QTFraction(self.num * other.num, self.den + other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "QTFraction":
        return QTFraction(-self.num, self.den)

    def __add__(self, other) -> "QTFraction":
        if isinstance(other, (int, QTLaurent)):
            other = QTFraction(other)
        if not isinstance(other, QTFraction):
            return NotImplemented
        if self.den == other.den:
            return QTFraction(self.num + other.num, self.den)
        return QTFraction(
            self.num * other.expand_den() + other.num * self.expand_den(), self.den + other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "QTFraction":
        return self + (-QTFraction(other) if not isinstance(other, QTFraction) else -other)

    @staticmethod
    def sum(fractions: Iterable["QTFraction"]) -> "QTFraction":
        """Sum over the least common multiple of the binomial factors."""
        fractions = [f if isinstance(f, QTFraction) else QTFraction(f) for f in fractions]
        if not fractions:
            return QTFraction(ZERO)
        first = fractions[0].den
        if all(f.den == first for f in fractions):
            total = ZERO
            for f in fractions:
                total = total + f.num
            return QTFraction(total, first)
        lcm: dict[QTLaurent, int] = {}
        per: list[dict[QTLaurent, int]] = []
        for f in fractions:
            counts: dict[QTLaurent, int] = {}
            for fac in f.den:
                for m in fac.binomials():
                    counts[m] = counts.get(m, 0) + 1
            per.append(counts)
            for m, k in counts.items():
                lcm[m] = max(lcm.get(m, 0), k)
        total = ZERO
        for f, counts in zip(fractions, per):
            num = f.num
            for m, k in lcm.items():
                for _ in range(k - counts.get(m, 0)):
                    num = num - num * m
            total = total + num
        den = [PochFactor(m, 1, 1) for m, k in lcm.items() for _ in range(k)]
        return QTFraction(total, den)

    def substitute(self, var: str, image: Scalar) -> "QTFraction":
        image = QTLaurent.coerce(image)
        return QTFraction(
            substitute(self.num, var, image), [f.substitute(var, image) for f in self.den]
        )

    def to_laurent(self) -> QTLaurent:
        """Exact polynomial value; ``NonPolynomialError`` if none exists."""
        num = self.num
        for f in self.den:
            for m in f.binomials():
                num = divide_by_binomial(num, m)
        return num

    def to_tseries(self, order: int) -> "TSeries":
        return TSeries.from_fraction(self, order)

    def __repr__(self) -> str:
        return f"QTFraction({self})"

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        return f"({self.num}) / {' '.join(format_factor(f) for f in self.den)}"


def format_factor(f: PochFactor) -> str:
    step = "q" if f.step == 1 else f"q^{f.step}"
    return f"({f.base};{step})_{f.length}"


# -- truncated series -----------------------------------------------------


class TSeries:
    """Power series truncated after degree ``order``.

    ``var='t'``: coefficients are pure-q Laurent polynomials.
    ``var='q'``: coefficients are integers (held as constant ``QTLaurent``).
    """

    __slots__ = ("order", "coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None, var: str = "t"):
        cs = [QTLaurent.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        if var == "t" and not all(c.is_pure_q() for c in cs):
            raise ValueError("t-series coefficients must not involve t")
        if var == "q" and not all(c.is_constant() for c in cs):
            raise ValueError("q-series coefficients must be integers")
        self.order = order
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_ints(cls, values: Iterable[int], order: int | None = None) -> "TSeries":
        return cls([QTLaurent.const(v) for v in values], order, var="q")

    @classmethod
    def from_laurent(cls, p: QTLaurent, order: int) -> "TSeries":
        coeffs = [ZERO] * (order + 1)
        for b, c in p.t_coefficients().items():
            if b < 0:
                raise ValueError("negative power of t in a t-series")
            if b <= order:
                coeffs[b] = c
        return cls(coeffs, order)

    @classmethod
    def from_fraction(cls, z: QTFraction, order: int) -> "TSeries":
        series = cls.from_laurent(z.num, order)
        for f in z.den:
            for m in f.binomials():
                c, a, b = _as_monomial(m)
                if b <= 0:
                    raise ValueError(
                        f"denominator factor 1 - {m} has no t-free unit constant term"
                    )
                # 1/(1 - m) = sum_j m^j
                geo = [ZERO] * (order + 1)
                j = 0
                while j * b <= order:
                    geo[j * b] = monomial(c**j, a * j, 0)
                    j += 1
                series = series * cls(geo, order)
        return series

    def __getitem__(self, k: int) -> QTLaurent:
        return self.coeffs[k]

    def ints(self) -> list[int]:
        return [c.constant_term() for c in self.coeffs]

    def _combine_check(self, other: "TSeries") -> None:
        if self.var != other.var:
            raise ValueError("series in different variables")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._combine_check(other)
        n = min(self.order, other.order)
        return TSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n, self.var)

    def __sub__(self, other: "TSeries") -> "TSeries":
        self._combine_check(other)
        n = min(self.order, other.order)
        return TSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n, self.var)

    def __mul__(self, other: "TSeries") -> "TSeries":
        self._combine_check(other)
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TSeries(out, n, self.var)

    def truncate(self, order: int) -> "TSeries":
        return TSeries(self.coeffs[: order + 1], min(order, self.order), self.var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return (self.var, self.order, self.coeffs) == (other.var, other.order, other.coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{self.var}^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"TSeries[{self.var}, O({self.order + 1})]({body or '0'})"

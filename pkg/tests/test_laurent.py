import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohzeta.laurent import (
    ONE,
    Q,
    T,
    ZERO,
    NonPolynomialError,
    PochFactor,
    QTFraction,
    QTLaurent,
    TSeries,
    divide_by_binomial,
    monomial,
    poch,
    qbinom,
    substitute,
)

from strategies import laurents


def test_canonical_form_drops_zeros():
    p = QTLaurent({(1, 0): 3, (2, 1): 0})
    assert p.terms == {(1, 0): 3}
    assert (Q - Q).terms == {}
    assert Q + 0 == Q


def test_term_order_is_t_then_q():
    p = T + Q**3 + monomial(1, -1, 1) + 1
    assert [k for k, _ in p.items()] == [(0, 0), (3, 0), (-1, 1), (0, 1)]


def test_arith_examples():
    assert (Q + T) * (Q - T) == Q**2 - T**2
    p = 3 * Q * T - 7
    assert p + ZERO == p
    assert (1 + Q) * (1 + Q**-1) == Q**-1 + 2 + Q


def test_big_coefficients_are_exact():
    p = (1 + Q) ** 200
    assert p.coefficient(100) == 90548514656103281165404177077484163874504589675413336841320
    assert p.evaluate(q=1, t=1) == 2**200


def test_exponent_overflow_is_detected():
    huge = monomial(1, 2**62)
    with pytest.raises(OverflowError):
        huge * huge


def test_negative_powers_only_for_unit_monomials():
    assert (-Q) ** -2 == Q**-2
    with pytest.raises(ValueError):
        (1 + Q) ** -1
    with pytest.raises(ValueError):
        (2 * Q) ** -1


@settings(max_examples=60, deadline=None)
@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=60, deadline=None)
@given(laurents)
def test_q_inversion_is_an_involution(p):
    qinv = monomial(1, -1)
    assert substitute(substitute(p, "q", qinv), "q", qinv) == p


@settings(max_examples=40, deadline=None)
@given(laurents, st.integers(min_value=-3, max_value=3))
def test_substitution_is_a_ring_map(p, k):
    image = monomial(1, k, 1)
    assert substitute(p * p, "t", image) == substitute(p, "t", image) ** 2


def test_substitute_examples():
    assert substitute(Q**2, "q", Q**-1) == Q**-2
    assert substitute(T**2, "t", Q * T) == Q**2 * T**2
    assert substitute(1 + Q + Q**2, "q", Q**2) == 1 + Q**2 + Q**4
    assert substitute(Q + T, "q", -Q) == -Q + T


def test_substitute_rejects_bad_images():
    with pytest.raises(ValueError):
        substitute(Q, "q", 1 + Q)
    with pytest.raises(ValueError):
        substitute(Q, "q", T)
    with pytest.raises(ValueError):
        substitute(Q, "q", ONE)
    with pytest.raises(ValueError):
        substitute(Q, "x", Q)


def test_poch_examples():
    assert poch(Q, 1, 0) == 1
    assert poch(Q, 1, 2) == 1 - Q - Q**2 + Q**3
    assert poch(monomial(-1, -1, 1), -1, 1) == 1 + monomial(1, -1, 1)
    with pytest.raises(ValueError):
        poch(Q, 1, -1)
    with pytest.raises(ValueError):
        poch(1 + Q, 1, 1)


def test_qbinom_examples():
    assert qbinom(4, 2) == 1 + Q + 2 * Q**2 + Q**3 + Q**4
    assert qbinom(3, -1) == 0
    assert qbinom(3, 4) == 0
    assert qbinom(-2, 1) == 0
    for e in (-2, -1, 1, 2):
        assert qbinom(7, 0, e) == 1


@pytest.mark.parametrize("e", [-2, -1, 1, 2])
def test_qbinom_symmetry(e):
    for n in range(13):
        for k in range(n + 1):
            assert qbinom(n, k, e) == qbinom(n, n - k, e)


def test_qbinom_pascal():
    for n in range(1, 13):
        for k in range(n + 1):
            assert qbinom(n, k) == qbinom(n - 1, k - 1) + qbinom(n - 1, k).scale_monomial(1, k)


def test_qbinom_at_one_is_binomial():
    from math import comb

    for n in range(10):
        for k in range(n + 1):
            assert qbinom(n, k).evaluate(q=1).constant_term() == comb(n, k)


def test_exact_division():
    f = poch(Q, 1, 3)
    assert divide_by_binomial(f, Q**2) == (1 - Q) * (1 - Q**3)
    with pytest.raises(NonPolynomialError):
        divide_by_binomial(1 + Q, Q**2)
    g = (1 - monomial(1, -1, 2)) * (3 + T)
    assert divide_by_binomial(g, monomial(1, -1, 2)) == 3 + T


def test_fraction_equality_is_cross_multiplication():
    lhs = QTFraction(ONE, [PochFactor(T, 1, 1)])
    rhs = QTFraction(1 + T, [PochFactor(T**2, 1, 1)])
    assert lhs == rhs
    assert lhs != QTFraction(1 + T + T**2, [PochFactor(T**2, 1, 1)])


def test_fraction_denominators_are_sorted():
    a = QTFraction(ONE, [PochFactor(T, 1, 2), PochFactor(Q, 1, 1)])
    b = QTFraction(ONE, [PochFactor(Q, 1, 1), PochFactor(T, 1, 2)])
    assert a.den == b.den


def test_fraction_arithmetic_and_reduction():
    x = QTFraction(ONE, [PochFactor(T, 1, 1)])
    y = QTFraction(T, [PochFactor(T, 1, 1)])
    assert (x - y).to_laurent() == ONE
    assert (x * QTFraction(1 - T)).to_laurent() == ONE
    with pytest.raises(NonPolynomialError):
        x.to_laurent()


def test_fraction_sum_uses_common_denominator():
    parts = [QTFraction(ONE, [PochFactor(T, 1, 1)]), QTFraction(ONE, [PochFactor(Q * T, 1, 1)])]
    total = QTFraction.sum(parts)
    assert total == parts[0] + parts[1]


def test_tseries_geometric_expansion():
    z = QTFraction(ONE, [PochFactor(T, 1, 1)])
    assert TSeries.from_fraction(z, 4).coeffs == (ONE,) * 5
    z2 = QTFraction(ONE, [PochFactor(T, 1, 2)])
    s = TSeries.from_fraction(z2, 2)
    assert s[1] == 1 + Q
    assert s[2] == 1 + Q + Q**2


def test_tseries_truncates_at_min_order():
    a = TSeries([1, 1, 1], 2)
    b = TSeries([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b).coeffs == (2, 2)
    with pytest.raises(ValueError):
        TSeries([T])


def test_tseries_rejects_unexpandable_denominator():
    z = QTFraction(ONE, [PochFactor(Q, 1, 1)])
    with pytest.raises(ValueError):
        TSeries.from_fraction(z, 3)

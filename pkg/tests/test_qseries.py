import math
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majinv import (
    Bipartition,
    Composition,
    MajInvStatistic,
    QPolynomial,
    Relation,
    bipartitional_product_formula,
    class_size,
    distribution,
    empty_relation,
    inv_stat,
    is_mahonian_up_to,
    k_maj_stat,
    maj_stat,
    q_factorial,
    q_integer,
    q_multinomial,
)
from majinv.words import compositions_of_weight


def poly(*coeffs):
    return QPolynomial.from_coeffs(coeffs)


def test_canonical_form():
    assert QPolynomial.from_coeffs([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPolynomial.from_coeffs([]).coeffs == (0,)
    with pytest.raises(ValueError):
        QPolynomial((1, 0))
    with pytest.raises(ValueError):
        QPolynomial(())


def test_arithmetic():
    p = poly(1, 1)
    assert (p + poly(0, 1, 2)).coeffs == (1, 2, 2)
    assert (p - p).is_zero()
    assert (p * poly(1, 1)).coeffs == (1, 2, 1)
    assert (3 * p).coeffs == (3, 3)
    assert (p * 0).is_zero()
    assert QPolynomial.monomial(3).coeffs == (0, 0, 0, 1)
    assert p(10) == 11
    assert poly(1, 2, 1)(1) == 4


def test_exact_div():
    num = poly(1, 2, 2, 1)
    assert num.exact_div(poly(1, 1)).coeffs == (1, 1, 1)
    with pytest.raises(ArithmeticError):
        poly(1, 1, 1).exact_div(poly(1, 1))
    with pytest.raises(ArithmeticError):
        poly(1).exact_div(poly(1, 1))
    with pytest.raises(ZeroDivisionError):
        poly(1, 1).exact_div(QPolynomial.zero())
    assert QPolynomial.zero().exact_div(poly(1, 1)).is_zero()


def test_text_rendering():
    assert poly(1, 2, 2, 1).text() == "1 + 2*q + 2*q^2 + q^3"
    assert poly(0, 3, 0, 1).text() == "3*q + q^3"
    assert QPolynomial.zero().text() == "0"
    assert poly(1).text() == "1"
    assert poly(0, 1).text() == "q"
    assert poly(-1, 1, -2).text() == "-1 + q - 2*q^2"


def test_json_round_trip():
    p = poly(1, 0, 5)
    assert QPolynomial.from_json_dict(p.to_json_dict()) == p


def test_q_factorial_examples():
    assert q_factorial(0) == poly(1)
    assert q_factorial(2) == poly(1, 1)
    assert q_factorial(3) == poly(1, 2, 2, 1)
    for n in range(8):
        f = q_factorial(n)
        assert f.degree == n * (n - 1) // 2
        assert f(1) == math.factorial(n)


def test_q_multinomial_examples():
    assert q_multinomial(Composition((1, 1, 1))) == poly(1, 2, 2, 1)
    assert q_multinomial(Composition((6,))) == poly(1)
    assert q_multinomial(Composition((2, 1))) == poly(1, 1, 1)


@lru_cache(maxsize=None)
def _q_binomial(n, k):
    # Pascal-style recurrence, the independent route to the same polynomial
    if k < 0 or k > n:
        return QPolynomial.zero()
    if k == 0 or k == n:
        return QPolynomial.one()
    return _q_binomial(n - 1, k - 1) + QPolynomial.monomial(k) * _q_binomial(n - 1, k)


def test_q_multinomial_against_binomial_recurrence():
    for r in range(1, 5):
        for n in range(7):
            for c in compositions_of_weight(r, n):
                expected = QPolynomial.one()
                partial = 0
                for ci in c.counts:
                    partial += ci
                    expected = expected * _q_binomial(partial, ci)
                assert q_multinomial(c) == expected


def test_distribution_examples():
    c = Composition((1, 1, 1))
    assert distribution(inv_stat(3), c) == poly(1, 2, 2, 1)
    assert distribution(maj_stat(3), c) == poly(1, 2, 2, 1)
    # a cyclic-triangle relation is not an order: its inversion count has
    # the degenerate distribution 3q + 3q^2 on the six permutations
    cyc = Relation.from_pairs(3, [(1, 2), (2, 3), (3, 1)])
    stat = MajInvStatistic(empty_relation(3), cyc)
    assert distribution(stat, c) == poly(0, 3, 3)
    with pytest.raises(ValueError):
        distribution(inv_stat(2), c)


def test_distribution_total_mass():
    for r in (1, 2, 3):
        stat = k_maj_stat(r, min(2, r))
        for n in range(5):
            for c in compositions_of_weight(r, n):
                assert distribution(stat, c)(1) == class_size(c)


def test_is_mahonian_up_to():
    assert is_mahonian_up_to(inv_stat(3), 5)
    assert is_mahonian_up_to(k_maj_stat(3, 2), 4)
    overlapping = MajInvStatistic(
        Relation.from_pairs(2, [(1, 2)]), Relation.from_pairs(2, [(1, 2)])
    )
    assert not is_mahonian_up_to(overlapping, 2)
    with pytest.raises(ValueError):
        is_mahonian_up_to(inv_stat(2), 0)


def test_macmahon_small():
    for r in (1, 2, 3):
        inv = inv_stat(r)
        maj = maj_stat(r)
        for n in range(6):
            for c in compositions_of_weight(r, n):
                qm = q_multinomial(c)
                assert distribution(inv, c) == qm
                assert distribution(maj, c) == qm


def test_product_formula_examples():
    natural_blocks = Bipartition(((3,), (2,), (1,)), (0, 0, 0))
    assert bipartitional_product_formula(
        Composition((1, 1, 1)), natural_blocks
    ) == poly(1, 2, 2, 1)
    one_block = Bipartition(((1,),), (1,))
    for n in range(1, 7):
        assert bipartitional_product_formula(
            Composition((n,)), one_block
        ) == QPolynomial.monomial(n * (n - 1) // 2)
    two_blocks = Bipartition(((2,), (1,)), (0, 0))
    assert bipartitional_product_formula(Composition((1, 1)), two_blocks) == poly(1, 1)
    with pytest.raises(ValueError):
        bipartitional_product_formula(Composition((1, 1)), one_block)


def test_product_formula_reflexive_block_matches_brute_force():
    # one reflexive block {1,2} under a singleton {3}: the closed form must
    # track the enumerated distribution including the q-power
    bip = Bipartition(((1, 2), (3,)), (1, 0))
    from majinv import relation_from_bipartition

    h = relation_from_bipartition(bip)
    stat = MajInvStatistic(empty_relation(3), h)
    for n in range(5):
        for c in compositions_of_weight(3, n):
            assert bipartitional_product_formula(c, bip) == distribution(stat, c)


coeffs_st = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=6)


@settings(max_examples=150)
@given(coeffs_st, coeffs_st)
def test_multiplication_commutes(a, b):
    pa, pb = QPolynomial.from_coeffs(a), QPolynomial.from_coeffs(b)
    assert pa * pb == pb * pa


@settings(max_examples=100)
@given(coeffs_st, coeffs_st, coeffs_st)
def test_multiplication_associates_and_distributes(a, b, c):
    pa, pb, pc = (QPolynomial.from_coeffs(x) for x in (a, b, c))
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa * (pb + pc) == pa * pb + pa * pc


@settings(max_examples=100)
@given(coeffs_st, coeffs_st)
def test_exact_division_inverts_multiplication(a, b):
    pa, pb = QPolynomial.from_coeffs(a), QPolynomial.from_coeffs(b)
    if pb.is_zero():
        return
    assert (pa * pb).exact_div(pb) == pa


def test_q_integer():
    assert q_integer(0).is_zero()
    assert q_integer(1) == poly(1)
    assert q_integer(4) == poly(1, 1, 1, 1)
    with pytest.raises(ValueError):
        q_integer(-1)

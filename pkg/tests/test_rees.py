# tests/test_rees.py
"""
Tests for the Rees quotient construction and its structural queries.
"""
import pytest

from src.core.congruence import GAMMA, LAMBDA, RHO, TAU1, TRIVIAL
from src.core.errors import KindMismatchError
from src.core.tau_order import TauWordSet
from src.monoids.rees import (
    build,
    has_star_idempotents,
    idempotents,
    is_j_trivial,
    j_order_covers,
)
from src.utils.notation import parse_word_list


def _build(kind, *literals):
    return build(kind, parse_word_list(kind, literals))


def test_build_orders_identity_first_and_zero_last():
    """Test that elements run identity, shortlex closure members, zero."""
    M = _build(GAMMA, 'ta+')
    assert M.labels == ('1', 'a', 'a+', 't', 'ta', 'ta+', '0')
    assert M.identity == 0
    assert M.zero == len(M) - 1


def test_products_leaving_the_closure_are_zero():
    """Test that a+ * ta+ falls outside the closure of ta+."""
    M = _build(GAMMA, 'ta+')
    product = M.table[M.index('a+')][M.index('ta+')]
    assert M.labels[product] == '0'
    assert M.labels[M.table[M.index('ta+')][M.index('a+')]] == 'ta+'
    assert M.labels[M.table[M.index('a')][M.index('a')]] == 'a+'


def test_empty_word_set_gives_the_one_element_monoid():
    M = build(TRIVIAL, TauWordSet.of(TRIVIAL, []))
    assert len(M) == 1
    assert M.labels == ('0',)


def test_plain_monoid_of_ab():
    """Test that M(ab) has the elements 1, a, b, ab, 0."""
    M = _build(TRIVIAL, 'ab')
    assert set(M.labels) == {'1', 'a', 'b', 'ab', '0'}
    assert M.is_associative()


def test_tau1_monoid_of_a_plus_b_plus():
    M = _build(TAU1, 'a+b+')
    assert M.labels == ('1', 'a+', 'b+', 'a+b+', '0')


def test_build_rejects_a_word_set_of_another_kind():
    W = parse_word_list(GAMMA, ['ab'])
    with pytest.raises(KindMismatchError):
        build(LAMBDA, W)


def test_lambda_monoid_of_ata_plus_has_nine_elements():
    M = _build(LAMBDA, 'ata+')
    assert len(M) == 9
    assert {'a', 'a+', 'ta+', 'ata+'} <= set(M.labels)


def test_nineteen_element_monoid(m_i):
    """Test that the lambda monoid of ba+sb+ has 19 elements."""
    assert len(m_i) == 19


def test_thirty_four_element_monoid(m_j):
    """Test the size of the lambda monoid of atba+sb+, including bas, ba+s and asb+."""
    assert len(m_j) == 34
    assert {'bas', 'ba+s', 'asb+', 'atba+sb+', 'tbasb+'} <= set(m_j.labels)


@pytest.mark.parametrize(
    'kind, literals',
    [
        (GAMMA, ('a+b+ta+',)),
        (GAMMA, ('ta+', 'b+t')),
        (LAMBDA, ('ba+sb+',)),
        (RHO, ('a+b+',)),
        (TAU1, ('a+b+',)),
        (TRIVIAL, ('abc',)),
    ],
)
def test_built_monoids_are_associative_and_j_trivial(kind, literals):
    """Test that constructed tables are associative and J-trivial."""
    M = _build(kind, *literals)
    assert M.is_associative()
    assert is_j_trivial(M)


@pytest.mark.parametrize(
    'kind, literal',
    [(GAMMA, 'a+b+ta+'), (GAMMA, 'a+tsa+'), (LAMBDA, 'ata+'), (LAMBDA, 'ba+sb+'), (RHO, 'a+b+')],
)
def test_idempotents_are_identity_zero_and_starred_letters(kind, literal):
    """Test the idempotent characterization under gamma, lambda and rho."""
    assert has_star_idempotents(_build(kind, literal))


def test_idempotents_of_a_plus_b_plus():
    M = _build(GAMMA, 'a+b+')
    assert {M.labels[e] for e in idempotents(M)} == {'1', 'a+', 'b+', '0'}


def test_j_order_covers_form_a_chain_for_one_letter():
    """Test that the J-order of the gamma monoid of a+ is 0 < a+ < a < 1."""
    M = _build(GAMMA, 'a+')
    assert set(M.labels) == {'1', 'a', 'a+', '0'}
    covers = {(M.labels[x], M.labels[y]) for x, y in j_order_covers(M)}
    assert covers == {('0', 'a+'), ('a+', 'a'), ('a', '1')}

# tests/test_constructions.py
"""
Tests for adjoined identities, products, duals, submonoids, quotients and
one-letter monoids.
"""
import pytest

from src.core.congruence import GAMMA, LAMBDA, CongruenceKind
from src.core.errors import UnsupportedKindError
from src.monoids.constructions import (
    CONGRUENCE,
    ZERO_GLUE,
    adjoin_identity,
    direct_product,
    dual,
    is_product_closed,
    monogenic,
    quotient_identify,
    restrict,
    submonoid,
)
from src.monoids.presentation import from_presentation, load_presentation_file
from src.monoids.rees import build
from src.monoids.spec import BUNDLED_PRESENTATIONS
from src.utils.notation import parse_word_list

SUB = 'sub:gamma:ta+,b+t{a+,b+,ta+,b+t}'


@pytest.fixture
def semigroup_a():
    return from_presentation(load_presentation_file(BUNDLED_PRESENTATIONS / 'A.pres'))


def test_adjoin_identity_puts_identity_first(semigroup_a):
    M = adjoin_identity(semigroup_a)
    assert len(M) == 7
    assert M.labels[0] == '1'
    assert M.identity == 0
    assert M.labels[M.zero] == '0'
    assert M.is_associative()


def test_adjoin_identity_primes_a_taken_label():
    M = adjoin_identity(monogenic(CongruenceKind.gamma_k(1)))
    assert M.labels[0] == "1'"
    assert len(M) == 5


def test_direct_product_is_componentwise():
    M1 = monogenic(CongruenceKind.gamma_k(1))
    M2 = monogenic(CongruenceKind.tau_m(2))
    P = direct_product(M1, M2)
    assert len(P) == 16
    assert P.labels[P.identity] == '(1,1)'
    x = P.index('(a,a)')
    assert P.labels[P.multiply(x, x)] == '(a+,a^2)'
    assert P.labels[P.zero] == '(0,0)'


def test_dual_transposes_the_table(semigroup_a):
    D = dual(semigroup_a)
    e, f = semigroup_a.index('e'), semigroup_a.index('f')
    assert D.multiply(e, f) == semigroup_a.multiply(f, e)
    assert dual(D).provenance == semigroup_a.provenance


def test_submonoid_is_generated_with_the_identity(a_one):
    sub, embedding = submonoid(a_one, [a_one.index('e')])
    assert set(sub.labels) == {'1', 'e'}
    assert sub.identity is not None
    assert embedding.is_homomorphism()


def test_submonoid_requires_an_identity(semigroup_a):
    with pytest.raises(ValueError, match="no identity"):
        submonoid(semigroup_a, [0])


def test_submonoid_requires_generators(a_one):
    with pytest.raises(ValueError):
        submonoid(a_one, [])


def test_restrict_rejects_open_subsets(a_one):
    e, f = a_one.index('e'), a_one.index('f')
    assert not is_product_closed(a_one, {e, f})
    with pytest.raises(ValueError, match="leaves the subset"):
        restrict(a_one, [e, f], 'ef')


def test_congruence_and_zero_glue_differ(resolver):
    """Test that the generated congruence collapses more than the zero-glue identification."""
    M = resolver.resolve(SUB)
    assert len(M) == 6
    pair = [(M.index('ta+'), M.index('b+t'))]
    assert len(quotient_identify(M, pair, CONGRUENCE)) == 4
    glued = quotient_identify(M, pair, ZERO_GLUE)
    assert len(glued) == 5
    assert any(set(label.split('=')) == {'ta+', 'b+t'} for label in glued.labels)


def test_quotient_rejects_unknown_mode(a_one):
    with pytest.raises(ValueError, match="Unknown identification mode"):
        quotient_identify(a_one, [], 'glue-ish')


def test_zero_glue_needs_a_zero():
    M = monogenic(CongruenceKind.tau_m(2))
    no_zero = restrict(M, [0, 1, 2], 'group')[0]
    with pytest.raises(ValueError, match="needs a monoid with zero"):
        quotient_identify(no_zero, [(1, 2)], ZERO_GLUE)


def test_quotient_of_built_monoid_is_associative():
    M = build(GAMMA, parse_word_list(GAMMA, ['a+b+']))
    Q = quotient_identify(M, [(M.index('a+'), M.index('b+'))], CONGRUENCE)
    assert Q.is_associative()
    assert len(Q) < len(M)


def test_monogenic_gamma_k():
    M = monogenic(CongruenceKind.gamma_k(2))
    assert M.labels == ('1', 'a', 'a^2', 'a^3+', '0')
    top = M.index('a^3+')
    assert M.multiply(top, M.index('a')) == top


def test_monogenic_tau_m_is_cyclic():
    M = monogenic(CongruenceKind.tau_m(3))
    a, a3 = M.index('a'), M.index('a^3')
    assert M.multiply(a3, a) == a
    assert M.multiply(a3, a3) == a3


def test_monogenic_meet_has_threshold_and_period():
    M = monogenic(CongruenceKind.meet(CongruenceKind.gamma_k(1), CongruenceKind.tau_m(2)))
    assert len(M) == 5
    assert M.multiply(M.index('a^3'), M.index('a')) == M.index('a^2')


def test_monogenic_rejects_other_kinds():
    with pytest.raises(UnsupportedKindError):
        monogenic(LAMBDA)

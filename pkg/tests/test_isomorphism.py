# tests/test_isomorphism.py
"""
Tests for isomorphism search and prescribed generator maps.
"""
from src.monoids.constructions import direct_product, dual
from src.monoids.isomorphism import (
    anti_isomorphic,
    element_signatures,
    extend_generator_map,
    generating_set,
    isomorphic,
)


def test_monoid_is_isomorphic_to_itself(a_one):
    witness = isomorphic(a_one, a_one)
    assert witness is not None
    assert witness.injective and witness.is_homomorphism()


def test_sizes_must_match(a_one, b0_one):
    assert isomorphic(a_one, b0_one) is None


def test_generating_set_generates(m_i):
    gens = generating_set(m_i)
    assert gens
    assert extend_generator_map(m_i, m_i, {g: g for g in gens}) is not None


def test_signatures_mark_identity_and_zero(a_one):
    signatures = element_signatures(a_one)
    assert signatures[a_one.identity][1]
    assert signatures[a_one.zero][2]


def test_lee_l2_matches_a0(resolver):
    assert isomorphic(resolver.resolve('lee:2^1'), resolver.resolve('pres:A0^1')) is not None


def test_glued_submonoid_is_b0_one(resolver, b0_one):
    glued = resolver.resolve('glue:sub:gamma:ta+,b+t{a+,b+,ta+,b+t}{ta+=b+t}')
    assert isomorphic(b0_one, glued) is not None


def test_gamma_and_lambda_agree_on_a_plus_b_plus(resolver):
    assert isomorphic(resolver.resolve('gamma:a+b+'), resolver.resolve('lambda:a+b+')) is not None


def test_prescribed_map_extends(resolver):
    """Test that e -> b+, f -> a+ extends to an isomorphism onto the gamma submonoid."""
    A0 = resolver.resolve('pres:A0^1')
    sub = resolver.resolve('sub:gamma:a+b+{a+,b+}')
    witness = extend_generator_map(A0, sub, {A0.index('e'): sub.index('b+'), A0.index('f'): sub.index('a+')})
    assert witness is not None
    assert witness.as_labels()['fe'] == 'a+b+'


def test_wrong_prescribed_map_is_rejected(resolver):
    A0 = resolver.resolve('pres:A0^1')
    sub = resolver.resolve('sub:gamma:a+b+{a+,b+}')
    swapped = {A0.index('e'): sub.index('a+'), A0.index('f'): sub.index('b+')}
    assert extend_generator_map(A0, sub, swapped) is None


def test_dual_is_anti_isomorphic(a_one):
    assert anti_isomorphic(a_one, dual(a_one)) is not None


def test_lambda_and_rho_are_mirror_images(resolver):
    """Test that reversing the words swaps the left and right congruences."""
    assert anti_isomorphic(resolver.resolve('lambda:ata+'), resolver.resolve('rho:a+ta')) is not None


def test_dual_of_a_product_is_the_product_of_duals(resolver):
    """Test that dualising commutes with direct products."""
    M1, M2 = resolver.resolve('t0:ab'), resolver.resolve('lambda:ata+')
    left = dual(direct_product(M1, M2))
    right = direct_product(dual(M1), dual(M2))
    assert len(left) == len(right)
    assert isomorphic(left, right) is not None

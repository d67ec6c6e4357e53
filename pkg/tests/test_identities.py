# tests/test_identities.py
"""
Tests for identity parsing, satisfaction, the identity families and the
variety bases.
"""
import pytest

from src.core.errors import NotationError, UnknownFamilyError
from src.identities.evaluation import satisfies, satisfies_all
from src.identities.families import FAMILIES, family, j_scheme_members, u_word
from src.identities.identity import enumerate_identities, parse_identity, variable_alphabet
from src.identities.search import equationally_equivalent_bounded
from src.identities.varieties import GENERATOR_ZOO, variety
from src.monoids.constructions import direct_product, monogenic
from src.core.congruence import CongruenceKind


class TestParsing:

    def test_parse_identity_with_powers(self):
        identity = parse_identity('xy^2tx ~ yxytx')
        assert identity.alphabet.letters == ('x', 'y', 't')
        assert len(identity.lhs) == 5
        assert identity.variables == (0, 1, 2)

    def test_alternative_separator(self):
        assert str(parse_identity('x ≈ x^2')) == 'x ~ x^2'

    @pytest.mark.parametrize('text', ['x', 'x ~', 'x ~ y ~ z', ' ~ y'])
    def test_malformed_identities(self, text):
        with pytest.raises(NotationError):
            parse_identity(text)

    def test_trivial_identity(self):
        assert parse_identity('xy ~ xy').is_trivial

    def test_variable_alphabet(self):
        assert variable_alphabet(3).letters == ('x1', 'x2', 'x3')
        with pytest.raises(ValueError):
            variable_alphabet(0)

    def test_enumeration_is_up_to_renaming(self):
        """Test that x1 ~ x2 appears once and x2 ~ x1 never does."""
        rendered = [str(i) for i in enumerate_identities(2, 1)]
        assert 'x1 ~ x2' in rendered
        assert 'x2 ~ x1' not in rendered
        assert all(not i.is_trivial for i in enumerate_identities(2, 3))


class TestSatisfaction:

    def test_threshold_identity_holds(self):
        M = monogenic(CongruenceKind.gamma_k(1))
        assert satisfies(M, parse_identity('x^2 ~ x^3'))

    def test_failure_carries_a_witness(self):
        M = monogenic(CongruenceKind.gamma_k(1))
        result = satisfies(M, parse_identity('x ~ x^2'))
        assert not result
        assert result.witness == {'x': 'a'}
        assert result.to_dict()['holds'] is False

    def test_a0_is_not_commutative(self, resolver):
        assert not satisfies(resolver.resolve('pres:A0^1'), parse_identity('xy ~ yx'))

    def test_b0_one_identity(self, b0_one):
        assert satisfies(b0_one, parse_identity('xtsx ~ xtxsx'))

    def test_search_path_agrees_with_vectors(self, a_one):
        """Test the substitution search used when the vector limit is exceeded."""
        assert satisfies(a_one, parse_identity('x^2 ~ x^3'), vector_limit=1)
        result = satisfies(a_one, parse_identity('xy ~ yx'), vector_limit=1)
        assert not result
        assert result.witness is not None

    def test_products_are_checked_per_factor(self, resolver):
        P = direct_product(resolver.resolve('pres:A0^1'), monogenic(CongruenceKind.tau_m(2)))
        result = satisfies(P, parse_identity('xy ~ yx'))
        assert not result
        assert set(result.witness.values()) <= set(P.labels)

    def test_satisfies_all_reports_first_failure(self, a_one):
        identities = [parse_identity('x^2 ~ x^3'), parse_identity('xy ~ yx')]
        ok, failing = satisfies_all(a_one, identities)
        assert not ok
        assert str(failing) == 'xy ~ yx'


class TestFamilies:

    def test_lee_family_starts_from_u_word(self):
        identity = family('lee', 2)
        assert identity.lhs == u_word(2)
        assert identity.lhs != identity.rhs

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            family('nope', 2)

    def test_family_minimum(self):
        with pytest.raises(ValueError, match="starts at"):
            family('lee', 1)

    def test_permutation_only_for_j_scheme(self):
        with pytest.raises(ValueError, match="takes no permutation"):
            family('gusev', 1, perm=(1,))
        with pytest.raises(ValueError, match="not a permutation"):
            family('j-scheme', 2, perm=(1, 1))

    def test_j_scheme_members(self):
        assert len(list(j_scheme_members(3))) == 6

    def test_every_family_builds(self):
        for name, f in FAMILIES.items():
            identity = family(name, max(f.minimum, 2))
            assert identity.lhs.alphabet == identity.rhs.alphabet

    def test_u_word_needs_positive_n(self):
        with pytest.raises(ValueError):
            u_word(0)


class TestVarieties:

    def test_chains_split_into_pairs(self):
        assert len(variety('H').identities()) == 6

    def test_j_scheme_members_are_appended(self):
        assert len(variety('J').identities(max_n=2)) == 4 + 1 + 2

    def test_unknown_variety(self):
        with pytest.raises(UnknownFamilyError):
            variety('Z')

    def test_e_basis_holds_in_e_one(self, resolver):
        v = variety('E')
        ok, failing = satisfies_all(resolver.resolve(v.generator), v.identities())
        assert ok, failing

    def test_zoo_names_resolve(self, resolver):
        M = resolver.resolve('zoo:var(F)')
        assert M.provenance == 'var(F)'
        assert len(M) == len(resolver.resolve(GENERATOR_ZOO['var(F)']))

    def test_zoo_word_monoids_are_themselves(self, resolver):
        assert len(resolver.resolve('zoo:M(ab)')) == len(resolver.resolve('t0:ab')) == 5

    def test_zoo_variety_generator_agrees_with_named_monoid(self, resolver):
        """Test that var(A0^1) is larger than A0^1 but has the same short identities."""
        named, generator = resolver.resolve('pres:A0^1'), resolver.resolve('zoo:var(A0^1)')
        assert (len(named), len(generator)) == (5, 10)
        assert equationally_equivalent_bounded(named, generator, nvars=2, maxlen=4).equivalent

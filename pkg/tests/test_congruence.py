# tests/test_congruence.py
"""
Tests for the congruence decision procedures.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.congruence import (
    GAMMA,
    LAMBDA,
    RHO,
    TAU1,
    TRIVIAL,
    CongruenceKind,
    Tag,
    class_representatives,
    related,
)
from src.core.errors import NotationError, UnsupportedKindError
from src.core.rewrite import canonical, expand
from src.core.words import Alphabet, Word, reverse

XY = Alphabet.of('x', 'y')
ABC = Alphabet.of('a', 'b', 'c')


def _related(kind, u, v):
    alphabet = Alphabet.from_text(u, v)
    return related(kind, alphabet.parse(u), alphabet.parse(v))


def test_parse_kind_names_and_parameters():
    """Test parsing of plain and parametrised kind names."""
    assert CongruenceKind.parse('t1') == TAU1
    assert CongruenceKind.parse('lambda') == LAMBDA
    assert CongruenceKind.parse('tau_m(3)') == CongruenceKind.tau_m(3)
    meet = CongruenceKind.parse('meet(gamma_k(1), tau_m(2))')
    assert meet.tag is Tag.MEET
    assert meet.members == (CongruenceKind.gamma_k(1), CongruenceKind.tau_m(2))


def test_parse_rejects_unknown_kinds():
    """Test that unknown names and missing parameters are notation errors."""
    with pytest.raises(NotationError):
        CongruenceKind.parse('delta')
    with pytest.raises(NotationError):
        CongruenceKind.parse('tau_m(x)')


def test_tau_m_requires_positive_parameter():
    """Test that tau_m(0) is rejected."""
    with pytest.raises(ValueError, match="parameter"):
        CongruenceKind.tau_m(0)


def test_gamma_distinguishes_content_profiles():
    """Test that xyyx and xy are not gamma-related."""
    assert not _related(GAMMA, 'xyyx', 'xy')


def test_gamma_ignores_exponents_of_repeated_letters():
    """Test that gamma relates x^2yx and xyx."""
    assert _related(GAMMA, 'x^2yx', 'xyx')


def test_lambda_sees_adjacency_of_first_two_occurrences():
    """Test that lambda separates x^2yx from xyx while rho does not."""
    assert not _related(LAMBDA, 'x^2yx', 'xyx')
    assert _related(RHO, 'x^2yx', 'xyx')
    assert not _related(RHO, 'xyx^2', 'xyx')


def test_tau1_compares_island_skeletons():
    """Test that tau1 relates words with the same skeleton."""
    assert _related(TAU1, 'x^2y', 'xy^3')
    assert not _related(TAU1, 'xyx', 'xy')


def test_trivial_is_equality():
    assert _related(TRIVIAL, 'xy', 'xy')
    assert not _related(TRIVIAL, 'x^2', 'x^3')


def test_gamma_k_caps_occurrence_counts():
    """Test that gamma_k(1) relates words with the same counts capped at 2."""
    assert _related(CongruenceKind.gamma_k(1), 'xyx', 'x^3y')
    assert not _related(CongruenceKind.gamma_k(1), 'xy', 'x^2y')


def test_tau_m_compares_exponents_modulo_m():
    """Test that tau_m(2) relates x and x^3 but not x and x^2."""
    assert _related(CongruenceKind.tau_m(2), 'x', 'x^3')
    assert not _related(CongruenceKind.tau_m(2), 'x', 'x^2')


def test_meet_requires_every_member():
    """Test that a meet relates only words related by all members."""
    meet = CongruenceKind.meet(GAMMA, LAMBDA)
    assert _related(meet, 'xyx^2', 'xyx')
    assert not _related(meet, 'x^2yx', 'xyx')


def test_related_requires_shared_alphabet():
    with pytest.raises(ValueError, match="same alphabet"):
        related(GAMMA, XY.parse('x'), ABC.parse('a'))


def test_class_representatives_under_gamma():
    """Test that the cube-free words in the class of a^2ba^2 are the four exponent patterns."""
    u = ABC.parse('a^2ba^2')
    found = sorted(w.power_notation() for w in class_representatives(GAMMA, u))
    assert found == sorted(['aba', 'aba^2', 'a^2ba', 'a^2ba^2'])


def test_class_representatives_under_lambda_keep_adjacency():
    """Test that lambda K-sets keep whether the first two occurrences touch."""
    u = ABC.parse('a^2ba')
    found = {w.power_notation() for w in class_representatives(LAMBDA, u)}
    assert found == {'a^2ba', 'a^2ba^2'}


def test_class_representatives_rejects_other_kinds():
    with pytest.raises(UnsupportedKindError):
        class_representatives(TAU1, ABC.parse('ab'))


words = st.lists(st.integers(min_value=0, max_value=2), max_size=6)


@settings(max_examples=200, deadline=None)
@given(
    kind=st.sampled_from([TAU1, GAMMA, LAMBDA, RHO]),
    u=words,
    prefix=words,
    suffix=words,
)
def test_relation_is_compatible_with_concatenation(kind, u, prefix, suffix):
    """Test that related words stay related after multiplying on both sides."""
    w = Word(ABC, tuple(u))
    v = expand(kind, canonical(kind, w))
    p, s = Word(ABC, tuple(prefix)), Word(ABC, tuple(suffix))
    assert related(kind, w, v)
    assert related(kind, p + w + s, p + v + s)


@settings(max_examples=200, deadline=None)
@given(kind=st.sampled_from([TAU1, GAMMA, LAMBDA, RHO]), u=words, v=words)
def test_canonical_forms_decide_the_relation(kind, u, v):
    """Test that equal canonical forms coincide with relatedness."""
    wu, wv = Word(ABC, tuple(u)), Word(ABC, tuple(v))
    assert (canonical(kind, wu) == canonical(kind, wv)) == related(kind, wu, wv)


BASE_KINDS = [TRIVIAL, TAU1, GAMMA, LAMBDA, RHO]

simple_kinds = st.one_of(
    st.sampled_from(BASE_KINDS),
    st.integers(1, 3).map(CongruenceKind.tau_m),
    st.integers(0, 3).map(CongruenceKind.gamma_k),
    st.integers(1, 3).map(CongruenceKind.tau1_lambda_k),
    st.integers(1, 3).map(CongruenceKind.tau1_rho_k),
)
all_kinds = st.one_of(
    simple_kinds,
    st.lists(simple_kinds, min_size=2, max_size=3).map(lambda members: CongruenceKind.meet(*members)),
)

skeletons = st.lists(st.integers(0, 2), min_size=1, max_size=4).filter(
    lambda s: all(a != b for a, b in zip(s, s[1:]))
)


@st.composite
def same_skeleton_words(draw, count=2):
    """Words sharing one island skeleton, so that most kinds relate some of them."""
    skeleton = draw(skeletons)
    found = []
    for _ in range(count):
        letters = []
        for letter in skeleton:
            letters.extend([letter] * draw(st.integers(1, 4)))
        found.append(Word(ABC, tuple(letters)))
    return found


@settings(max_examples=300, deadline=None)
@given(kind=all_kinds, pair=same_skeleton_words(), prefix=words, suffix=words)
def test_every_kind_is_stable_under_multiplication(kind, pair, prefix, suffix):
    """Test that related words stay related after multiplying on both sides, for every kind."""
    u, v = pair
    p, s = Word(ABC, tuple(prefix)), Word(ABC, tuple(suffix))
    if related(kind, u, v):
        assert related(kind, p + u, p + v)
        assert related(kind, u + s, v + s)
        assert related(kind, p + u + s, p + v + s)


@settings(max_examples=300, deadline=None)
@given(kind=all_kinds, triple=same_skeleton_words(count=3))
def test_every_kind_is_an_equivalence(kind, triple):
    """Test reflexivity, symmetry and transitivity on words of one skeleton."""
    u, v, w = triple
    assert related(kind, u, u)
    assert related(kind, u, v) == related(kind, v, u)
    if related(kind, u, v) and related(kind, v, w):
        assert related(kind, u, w)


def test_adjacency_meets_look_at_the_first_k_gaps():
    """Test that tau1_lambda_k(k) compares the gaps after the first k occurrences only."""
    lam1 = CongruenceKind.tau1_lambda_k(1)
    assert _related(lam1, 'x^2yx^2', 'x^2yx^3')
    assert _related(CongruenceKind.tau1_lambda_k(2), 'x^2yx^2', 'x^2yx')
    assert not _related(CongruenceKind.tau1_lambda_k(3), 'x^2yx^2', 'x^2yx')
    assert not _related(lam1, 'xyx', 'x^2yx')
    assert _related(CongruenceKind.tau1_rho_k(1), 'x^2yx^2', 'x^3yx^2')
    assert not _related(CongruenceKind.tau1_rho_k(1), 'xyx', 'xyx^2')


@settings(max_examples=300, deadline=None)
@given(pair=same_skeleton_words())
def test_gamma_is_the_meet_of_tau1_and_gamma_k_one(pair):
    u, v = pair
    assert related(GAMMA, u, v) == related(CongruenceKind.meet(TAU1, CongruenceKind.gamma_k(1)), u, v)


@settings(max_examples=300, deadline=None)
@given(u=words, v=words)
def test_gamma_is_the_meet_on_arbitrary_words(u, v):
    wu, wv = Word(ABC, tuple(u)), Word(ABC, tuple(v))
    assert related(GAMMA, wu, wv) == related(CongruenceKind.meet(TAU1, CongruenceKind.gamma_k(1)), wu, wv)


@settings(max_examples=300, deadline=None)
@given(pair=same_skeleton_words())
def test_rho_is_the_reverse_of_lambda(pair):
    """Test that rho relates u and v exactly when lambda relates their reversals."""
    u, v = pair
    assert related(RHO, u, v) == related(LAMBDA, reverse(u), reverse(v))


@settings(max_examples=300, deadline=None)
@given(pair=same_skeleton_words())
def test_tau_m_one_is_tau1(pair):
    u, v = pair
    assert related(CongruenceKind.tau_m(1), u, v) == related(TAU1, u, v)

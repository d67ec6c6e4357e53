# tests/test_notation.py
"""
Tests for tau-word literals.
"""
import pytest

from src.core.congruence import GAMMA, LAMBDA, TAU1, TRIVIAL
from src.core.errors import IllegalSegmentError, NotReducedError, NotationError
from src.utils.notation import literal_alphabet, parse_tau_word, parse_word_list, render, split_words


def test_literal_alphabet_sorts_names():
    assert literal_alphabet('ta+', 'b+t').letters == ('a', 'b', 't')


def test_reduced_literal_parses():
    w = parse_tau_word(LAMBDA, 'atba+sb+')
    assert render(w) == 'atba+sb+'


def test_unreduced_literal_suggests_normal_form():
    with pytest.raises(NotReducedError) as error:
        parse_tau_word(GAMMA, 'aba')
    assert error.value.suggestion == 'a+ba+'
    assert 'a+ba+' in str(error.value)


def test_tau1_needs_starred_segments():
    with pytest.raises(IllegalSegmentError):
        parse_tau_word(TAU1, 'ab')


def test_plain_words_have_no_stars():
    with pytest.raises(IllegalSegmentError):
        parse_tau_word(TRIVIAL, 'a+b')


def test_malformed_literal():
    with pytest.raises(NotationError):
        parse_tau_word(GAMMA, 'a++')


def test_word_list_shares_one_alphabet():
    W = parse_word_list(GAMMA, ['ta+', 'b+t'])
    assert {w.label for w in W.members} == {'ta+', 'b+t'}
    assert len({w.alphabet for w in W.members}) == 1


def test_split_words_drops_blanks():
    assert split_words(' ta+, b+t ,, ') == ['ta+', 'b+t']

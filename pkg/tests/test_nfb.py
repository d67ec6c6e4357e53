# tests/test_nfb.py
"""
Tests for the bounded check of the finite-basis hypotheses.
"""
import pytest

from src.core.congruence import GAMMA
from src.identities.nfb import LIMITATION, NfbConfig, check_nfb_hypotheses
from src.utils.notation import parse_tau_word, literal_alphabet


def test_range_must_start_at_two(a_one):
    with pytest.raises(ValueError, match="Invalid range"):
        NfbConfig(monoid=a_one, n_min=1)
    with pytest.raises(ValueError):
        NfbConfig(monoid=a_one, n_min=3, n_max=2)


def test_report_carries_the_limitation(resolver):
    report = check_nfb_hypotheses(NfbConfig(monoid=resolver.resolve('t0:ab'), n_min=2, n_max=2))
    data = report.to_dict()
    assert data['note'] == LIMITATION
    assert [c['clause'] for c in data['clauses']] == ['u-word']
    assert data['passed'] == report.passed


@pytest.mark.slow
def test_gamma_monoid_meets_both_hypotheses(resolver):
    """Test the u-word witnesses and the required tau-words on a small bound."""
    literals = ['a+tb+a+', 'a+b+ta+']
    alphabet = literal_alphabet(*literals)
    config = NfbConfig(
        monoid=resolver.resolve('gamma:a+b+ta+,a+tb+a+'),
        required_words=tuple(parse_tau_word(GAMMA, text, alphabet) for text in literals),
        kind=GAMMA,
        n_min=2,
        n_max=3,
        tau_term_maxlen=6,
    )
    report = check_nfb_hypotheses(config)
    assert report.passed, report.to_dict()
    assert len(report.clauses) == 4
    assert all(c['witness'] for c in report.clauses if c['clause'] == 'u-word')


@pytest.mark.parametrize('spec', ['t0:', 'pres:E^1'])
def test_tau_term_clause_fails_where_the_word_is_not_a_term(resolver, spec):
    """Test that monoids with too many identities fail the required-word clause."""
    alphabet = literal_alphabet('a+b+ta+')
    config = NfbConfig(
        monoid=resolver.resolve(spec),
        required_words=(parse_tau_word(GAMMA, 'a+b+ta+', alphabet),),
        kind=GAMMA,
        n_min=2,
        n_max=2,
        tau_term_maxlen=6,
    )
    report = check_nfb_hypotheses(config)
    tau_term = [c for c in report.clauses if c['clause'] == 'tau-term']
    assert len(tau_term) == 1
    assert tau_term[0]['passed'] is False
    assert not report.passed

# tests/test_formatters.py
"""
Tests for the table, JSON and DOT formatters.
"""
import json

import pytest

from src.core.errors import NotationError
from src.formatters import DotFormatter, JsonFormatter, TableFormatter, monoid_from_dict, monoid_to_dict
from src.monoids.constructions import monogenic
from src.core.congruence import CongruenceKind


@pytest.fixture(scope='module')
def e_one(resolver):
    """M_gamma(ta+): 1, a, a+, t, ta, ta+, 0."""
    return resolver.resolve('gamma:ta+')


def test_table_frame_is_the_cayley_table(e_one):
    frame = TableFormatter().frame(e_one)
    assert list(frame.index) == list(e_one.labels)
    assert frame.loc['t', 'a+'] == 'ta+'
    assert frame.loc['a+', 't'] == '0'
    assert frame.loc['1', 'ta'] == 'ta'


def test_table_header(e_one):
    text = TableFormatter().format(e_one)
    assert '7 elements; identity 1; zero 0' in text
    assert 'idempotents: 1, a+, 0' in text
    assert 'J-trivial: yes' in text


def test_table_header_without_zero():
    group = monogenic(CongruenceKind.tau_m(2))
    text = TableFormatter().format(group, title='cyclic')
    assert text.splitlines()[1] == 'cyclic'
    assert 'J-trivial: no' in text


def test_json_dump_fields(e_one):
    data = monoid_to_dict(e_one)
    assert data['size'] == 7
    assert data['identity'] == '1' and data['zero'] == '0'
    assert data['j_trivial'] is True
    assert ['0', 'ta+'] in data['j_order_covers']


def test_json_dump_rebuilds(e_one):
    rebuilt = monoid_from_dict(json.loads(JsonFormatter().format(e_one)))
    assert rebuilt.table == e_one.table
    assert rebuilt.identity == e_one.identity


def test_json_dump_needs_a_table():
    with pytest.raises(NotationError, match="lacks"):
        monoid_from_dict({'labels': ['1']})


def test_json_formatter_uses_to_dict():
    class Verdict:
        def to_dict(self):
            return {'status': 'holds-up-to-bound'}
    assert json.loads(JsonFormatter().format(Verdict())) == {'status': 'holds-up-to-bound'}


def test_dot_has_one_edge_per_cover(e_one):
    dot = DotFormatter().format(e_one)
    assert dot.startswith('digraph J {')
    assert '"0" -> "ta+";' in dot
    assert dot.count('->') == len(monoid_to_dict(e_one)['j_order_covers'])


def test_dot_needs_j_trivial():
    with pytest.raises(ValueError, match="not J-trivial"):
        DotFormatter().format(monogenic(CongruenceKind.tau_m(2)))

# tests/test_validation.py
"""
Tests for the fixtures document validation.
"""
import json

import pytest

from src.utils.validation import load_fixture_document, validate_fixture_keys

FIXTURE = {'id': 'size-e', 'section': 's4', 'check': 'size', 'params': {'spec': 'gamma:ta+'}}


def test_validate_fixture_keys_passes():
    validate_fixture_keys(FIXTURE)


def test_validate_fixture_keys_lists_missing_and_available():
    with pytest.raises(ValueError) as error:
        validate_fixture_keys({'id': 'x', 'check': 'size'})
    message = str(error.value)
    assert 'missing required keys: params, section' in message
    assert 'Available keys: check, id' in message


def test_load_fixture_document(write_fixtures):
    path = write_fixtures([FIXTURE])
    document = load_fixture_document(path)
    assert document['version'] == 1
    assert document['fixtures'][0]['id'] == 'size-e'


def test_missing_file(temp_dir):
    with pytest.raises(FileNotFoundError):
        load_fixture_document(temp_dir / 'nope.json')


def test_corrupted_json(temp_dir):
    path = temp_dir / 'fixtures.json'
    path.write_text('{ invalid json content }')
    with pytest.raises(ValueError, match="Corrupted JSON"):
        load_fixture_document(path)


def test_document_needs_version_and_list(temp_dir):
    path = temp_dir / 'fixtures.json'
    path.write_text(json.dumps({'fixtures': {}}))
    with pytest.raises(ValueError, match="'version'"):
        load_fixture_document(path)


def test_duplicate_ids(write_fixtures):
    path = write_fixtures([FIXTURE, dict(FIXTURE)])
    with pytest.raises(ValueError, match="Duplicate fixture id 'size-e'"):
        load_fixture_document(path)


def test_bundled_fixtures_are_valid(bundled_fixtures):
    document = load_fixture_document(bundled_fixtures)
    assert {f['section'] for f in document['fixtures']} == {'s4', 's5', 's7', 's8'}

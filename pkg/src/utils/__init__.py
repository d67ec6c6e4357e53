"""Literal notation and input validation helpers."""
from .notation import parse_tau_word, parse_word_list, render
from .validation import load_fixture_document, validate_fixture_keys

__all__ = ['parse_tau_word', 'parse_word_list', 'render', 'load_fixture_document', 'validate_fixture_keys']

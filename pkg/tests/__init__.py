# tests/__init__.py
"""
Test suite for the monoid laboratory.
"""

"""Identities, their satisfaction and the bounded searches built on it."""

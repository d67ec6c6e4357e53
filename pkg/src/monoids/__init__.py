"""Finite monoids: tables, Rees quotients of tau-words, presentations and constructions."""

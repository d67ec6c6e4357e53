"""
Monoid laboratory.

Finite monoids M_tau(W) built from sets of tau-words, the finite-monoid
constructions needed to compare them, and bounded identity checking.
"""
from src.core.config import LabConfig
from src.core.report_writer import ReportWriter

__version__ = '1.0.0'
__all__ = [
    'LabConfig',
    'ReportWriter',
]

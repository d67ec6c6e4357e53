"""Replays the stored fact suite against the library."""
from .base_check import BaseCheck, CheckOutcome, VerifyContext
from .runner import SECTIONS, VerifyRunner

__all__ = ['BaseCheck', 'CheckOutcome', 'VerifyContext', 'SECTIONS', 'VerifyRunner']

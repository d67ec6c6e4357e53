"""Words, congruences, rewriting, tau-orders and the shared ambient pieces."""
from .config import LabConfig
from .errors import LabError
from .report_writer import ReportWriter

__all__ = ['LabConfig', 'LabError', 'ReportWriter']

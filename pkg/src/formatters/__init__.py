"""Output formatters: Cayley tables, JSON dumps and DOT diagrams."""
from .dot_formatter import DotFormatter
from .json_formatter import JsonFormatter, monoid_from_dict, monoid_to_dict
from .table_formatter import TableFormatter

__all__ = ['DotFormatter', 'JsonFormatter', 'TableFormatter', 'monoid_from_dict', 'monoid_to_dict']

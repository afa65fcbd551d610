"""Utility functions"""

from .random_streams import RandomStreams
from .csv_table import CsvTable, format_cell, read_rows, parse_float

__all__ = ["RandomStreams", "CsvTable", "format_cell", "read_rows", "parse_float"]

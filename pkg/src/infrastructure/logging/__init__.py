"""Logging infrastructure"""

from .logger import TextFormatter, record_fields, setup_logging

__all__ = ["TextFormatter", "record_fields", "setup_logging"]

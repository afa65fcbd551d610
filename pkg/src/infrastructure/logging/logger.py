"""
Process-wide logging: human-readable or JSON records on stderr, plus an
optional JSON file. Stdout is left to the CLI's key=value result lines.
"""

import logging
import sys
from typing import Any, Dict, Optional

from pythonjsonlogger import jsonlogger


JSON_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"

# Attributes every LogRecord carries; anything else arrived through `extra=`.
_RECORD_ATTRS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime"}


def record_fields(record: logging.LogRecord) -> Dict[str, Any]:
    """Structured fields passed via `extra=` (iteration, event payload, ...)"""
    return {k: v for k, v in record.__dict__.items() if k not in _RECORD_ATTRS and not k.startswith("_")}


class TextFormatter(logging.Formatter):
    """
    `time level logger: message key=value ...`
    Level names are colored only when the stream is a terminal.
    """
    
    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"
    
    def __init__(self, color: bool = False):
        super().__init__(fmt="%(asctime)s %(levelname)s %(name)s: %(message)s", datefmt="%H:%M:%S")
        self.color = color
    
    def format(self, record: logging.LogRecord) -> str:
        levelname = record.levelname
        if self.color and levelname in self.COLORS:
            record.levelname = f"{self.COLORS[levelname]}{levelname}{self.RESET}"
        try:
            line = super().format(record)
        finally:
            record.levelname = levelname
        fields = record_fields(record)
        if fields:
            line += " " + " ".join(f"{k}={_short(v)}" for k, v in fields.items())
        return line


def _short(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _json_formatter() -> logging.Formatter:
    return jsonlogger.JsonFormatter(
        JSON_FORMAT,
        rename_fields={"asctime": "timestamp", "levelname": "level", "name": "logger"},
    )


def setup_logging(level: str = "INFO", format_type: str = "text", log_file: Optional[str] = None) -> None:
    """
    Replace root handlers.
    
    Args:
        level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        format_type: 'text' or 'json' for the stderr handler
        log_file: Extra handler, always JSON
    """
    numeric = getattr(logging, level.upper())
    root = logging.getLogger()
    root.setLevel(numeric)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    
    console = logging.StreamHandler(sys.stderr)
    if format_type == "json":
        console.setFormatter(_json_formatter())
    else:
        console.setFormatter(TextFormatter(color=sys.stderr.isatty()))
    root.addHandler(console)
    
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(_json_formatter())
        root.addHandler(file_handler)

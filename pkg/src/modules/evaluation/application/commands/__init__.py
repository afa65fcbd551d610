"""Evaluation commands"""

from .evaluate_run import EvaluateRunCommand, EvaluateRunHandler
from .export_plot_data import ExportPlotDataCommand, ExportPlotDataHandler
from .sweep_alpha import SweepAlphaCommand, SweepAlphaHandler

__all__ = [
    "EvaluateRunCommand",
    "EvaluateRunHandler",
    "ExportPlotDataCommand",
    "ExportPlotDataHandler",
    "SweepAlphaCommand",
    "SweepAlphaHandler",
]

from bootstrapper.container import get_container
from modules.evaluation.application.commands import (
    EvaluateRunHandler,
    ExportPlotDataHandler,
    SweepAlphaHandler,
)

# ============================================================================
# HANDLER DEPENDENCIES
# ============================================================================

def get_evaluate_run_handler() -> EvaluateRunHandler:
    return get_container().resolve(EvaluateRunHandler)


def get_sweep_alpha_handler() -> SweepAlphaHandler:
    return get_container().resolve(SweepAlphaHandler)


def get_export_plot_data_handler() -> ExportPlotDataHandler:
    return get_container().resolve(ExportPlotDataHandler)

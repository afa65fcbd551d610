from bootstrapper.container import get_container
from modules.trainer.application.commands import TrainHandler

# ============================================================================
# HANDLER DEPENDENCIES
# ============================================================================

def get_train_handler() -> TrainHandler:
    return get_container().resolve(TrainHandler)

from bootstrapper.container import get_container
from modules.demos.application.commands import GenerateDemoHandler

# ============================================================================
# HANDLER DEPENDENCIES
# ============================================================================

def get_generate_demo_handler() -> GenerateDemoHandler:
    return get_container().resolve(GenerateDemoHandler)

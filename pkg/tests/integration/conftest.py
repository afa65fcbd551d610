"""
Fixtures wiring real services for pipeline tests.
"""

import pytest

from config.settings import Settings
from modules.demos.application.services import DemoService
from modules.demos.infrastructure.persistence import DemoCsvRepository
from modules.evaluation.application.commands import EvaluateRunHandler
from modules.tensor_nn.application.services import NetworkFactory
from modules.trainer.application.services import TrainingService
from modules.trainer.infrastructure.persistence import CheckpointRepository


@pytest.fixture
def settings(tmp_path) -> Settings:
    """
    Test settings with runs under tmp_path and no .env lookup.
    """
    return Settings(_env_file=None, ENVIRONMENT="testing", RUNS_DIR=str(tmp_path / "runs"))


@pytest.fixture
def training_service(settings) -> TrainingService:
    return TrainingService(DemoService(DemoCsvRepository()), NetworkFactory(), CheckpointRepository(), settings)


@pytest.fixture
def evaluate_handler(training_service) -> EvaluateRunHandler:
    return EvaluateRunHandler(training_service)

"""
Pytest configuration and fixtures.
Contains shared fixtures for all tests.
"""

from pathlib import Path

import numpy as np
import pytest

from bootstrapper.container import reset_container
from config.run_config import RunConfig


# Small enough for a training iteration to take well under a second.
TINY_OVERRIDES = {
    "train.iterations": 3,
    "train.num_envs": 2,
    "train.steps_per_env": 8,
    "train.epochs": 2,
    "train.minibatches": 2,
    "train.policy_hidden": [8, 8],
    "train.value_hidden": [8, 8],
    "train.checkpoint_interval": 2,
    "train.eval_interval": 0,
    "style.disc_hidden": [8, 8],
    "style.disc_batch_size": 8,
    "envs.point_reach_horizon": 10,
    "envs.planar_gait_horizon": 10,
    "cmdp.warmup_window": 1,
    "cmdp.constraint_interval": 1,
}


@pytest.fixture(autouse=True)
def clean_container():
    """
    Each test starts from an empty IoC container.
    """
    reset_container()
    yield
    reset_container()


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Seeded generator for test data.
    """
    return np.random.default_rng(1234)


@pytest.fixture
def tiny_config():
    """
    Factory for fast run configurations; keyword overrides use dotted keys.
    """
    def build(env: str = "point_reach", **overrides) -> RunConfig:
        data = {"env": env, **TINY_OVERRIDES, **overrides}
        return RunConfig.load(None, data)
    return build


@pytest.fixture
def run_dir(tmp_path: Path) -> Path:
    """
    Fresh run directory path (not created).
    """
    return tmp_path / "run"

"""Demonstration sourcing for runs"""

from pathlib import Path

from core.application.base_service import BaseService
from core.domain.enums import DemoSourceEnum, EnvIdEnum
from core.exceptions import DimensionMismatchException
from config.run_config import RunConfig
from modules.envs.domain.services.symmetry import symmetry_ops
from modules.envs.application.services.env_factory import make_environment
from ...domain.entities import DemonstrationSet, DemoTrajectory
from ...domain.services import generate_gait_demo, generate_reach_demo
from ...infrastructure.persistence import DemoCsvRepository


class DemoService(BaseService):
    """Builds the demonstration set a run trains and evaluates against"""
    
    def __init__(self, repository: DemoCsvRepository = None):
        super().__init__()
        self._repository = repository or DemoCsvRepository()
    
    def generate(self, config: RunConfig) -> DemoTrajectory:
        """Closed-form demo for the configured environment"""
        demo, dt = config.demo, config.envs.dt
        if config.env == EnvIdEnum.PointReach:
            return generate_reach_demo(demo.reach_goal, demo.reach_amplitude, demo.reach_periods, dt)
        return generate_gait_demo(demo.gait_frequency, demo.gait_amplitude, demo.gait_cycles, dt)
    
    def trajectory(self, config: RunConfig) -> DemoTrajectory:
        """
        Demo trajectory from the configured source.
        
        Raises:
            DimensionMismatchException: File features do not fit the environment
        """
        if config.demo.source == DemoSourceEnum.File:
            trajectory = self._repository.load(Path(config.demo.path))
        else:
            trajectory = self.generate(config)
        
        expected = make_environment(config.env, config.envs).feature_dim
        if trajectory.feature_dim != expected:
            raise DimensionMismatchException(f"demo features for {config.env.value}", expected, trajectory.feature_dim)
        if abs(trajectory.period - config.envs.dt) > 1e-9:
            self.logger.warning(
                "Demo sampling period differs from env dt",
                extra={"period": trajectory.period, "dt": config.envs.dt},
            )
        return trajectory
    
    def demonstration_set(self, config: RunConfig) -> DemonstrationSet:
        """Unaugmented set with the environment's symmetry group attached"""
        trajectory = self.trajectory(config)
        demo_set = DemonstrationSet([trajectory], symmetry_ops(config.env))
        self.logger.info(
            f"Loaded demo '{trajectory.name}'",
            extra={"samples": trajectory.length, "pairs": demo_set.pair_count, "env_id": config.env.value},
        )
        return demo_set

"""Environment construction from run configuration"""

from core.domain.enums import EnvIdEnum
from config.run_config import EnvSection
from ...domain.entities import Environment, PlanarGait, PointReach
from ...domain.exceptions import UnknownEnvironmentException


def make_environment(env_id, section: EnvSection = None) -> Environment:
    """
    Build an environment with constants from the envs config section.
    
    Raises:
        UnknownEnvironmentException: Unrecognized id
    """
    section = section or EnvSection()
    try:
        env = EnvIdEnum(env_id.value if isinstance(env_id, EnvIdEnum) else env_id)
    except ValueError:
        raise UnknownEnvironmentException(str(env_id))
    
    if env == EnvIdEnum.PointReach:
        return PointReach(
            dt=section.dt,
            horizon=section.point_reach_horizon,
            max_acceleration=section.max_acceleration,
            goal_x_range=section.goal_x_range,
            goal_y_range=section.goal_y_range,
            arena_half_size=section.arena_half_size,
        )
    return PlanarGait(
        dt=section.dt,
        horizon=section.planar_gait_horizon,
        drive_gain=section.drive_gain,
        damping=section.damping,
        stiffness=section.stiffness,
        velocity_sigma=section.velocity_sigma,
        command_range=section.command_range,
        arena_half_size=section.arena_half_size,
    )

"""
Run configuration.

A run is described by a flat TOML file of dotted keys::

    env = "planar_gait"
    style.mode = "adversarial"
    cmdp.alpha = 0.9
    train.seed = 3

Precedence: ``--set key=value`` overrides > file > ``LAB_`` environment variables > defaults.
"""

import json
import tomllib
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict, TomlConfigSettingsSource

from core.domain.enums import (
    DemoSourceEnum,
    EnvIdEnum,
    MultiplierCadenceEnum,
    StyleModeEnum,
    TrainingMethodEnum,
)
from core.exceptions import NotFoundException, ValidationException


class InvalidConfigurationException(ValidationException):
    """Run configuration failed validation"""

    def __init__(self, message: str, errors: Dict[str, Any]):
        super().__init__(message=message, errors=errors)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EnvSection(_Section):
    """Physical constants of the desk-scale environments"""

    dt: float = Field(default=0.05, gt=0, description="Integration step (s)")
    point_reach_horizon: int = Field(default=100, ge=2)
    planar_gait_horizon: int = Field(default=200, ge=2)
    max_acceleration: float = Field(default=4.0, gt=0, description="PointReach a_max")
    drive_gain: float = Field(default=8.0, gt=0, description="PlanarGait actuator gain k")
    damping: float = Field(default=2.0, ge=0)
    stiffness: float = Field(default=4.0, ge=0)
    velocity_sigma: float = Field(default=0.25, gt=0, description="Velocity tracking kernel width")
    command_range: Tuple[float, float] = Field(default=(0.3, 1.2))
    goal_x_range: Tuple[float, float] = Field(default=(0.6, 1.0))
    goal_y_range: Tuple[float, float] = Field(default=(-0.2, 0.2))
    arena_half_size: float = Field(default=2.0, gt=0)
    contact_threshold: float = Field(default=0.1, ge=0, description="|dq| below this counts as stance")

    @field_validator("command_range", "goal_x_range", "goal_y_range")
    @classmethod
    def validate_range(cls, v: Tuple[float, float]) -> Tuple[float, float]:
        """Ranges must be ordered"""
        if v[0] > v[1]:
            raise ValueError("range lower bound exceeds upper bound")
        return v


class DemoSection(_Section):
    """Demonstration source"""

    source: DemoSourceEnum = DemoSourceEnum.Generator
    path: Optional[str] = None
    reach_goal: Tuple[float, float] = (0.8, 0.0)
    reach_amplitude: float = Field(default=0.1, ge=0)
    reach_periods: int = Field(default=2, ge=1)
    gait_frequency: float = Field(default=0.5, gt=0, description="Hz")
    gait_amplitude: float = Field(default=0.38, ge=0)
    gait_cycles: int = Field(default=6, ge=1)


class StyleSection(_Section):
    """Style reward pathway"""

    mode: Optional[StyleModeEnum] = Field(
        default=None, description="tracking | adversarial (per-env default when unset)"
    )
    symmetry: bool = Field(default=True, description="Symmetry-augmented reward and batches")
    tracking_weights: Optional[List[float]] = None
    w_gp: float = Field(default=10.0, ge=0)
    disc_learning_rate: float = Field(default=1e-4, gt=0)
    disc_hidden: List[int] = Field(default=[128, 128])
    disc_batch_size: int = Field(default=256, ge=2)
    disc_updates_per_epoch: int = Field(default=1, ge=0)

    @field_validator("tracking_weights")
    @classmethod
    def validate_weights(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        """Weights must be non-negative with one positive entry"""
        if v is None:
            return v
        if any(w < 0 for w in v) or not any(w > 0 for w in v):
            raise ValueError("tracking weights must be >= 0 with at least one positive")
        return v


class CmdpSection(_Section):
    """Constrained optimization settings"""

    method: TrainingMethodEnum = TrainingMethodEnum.Constrained
    alpha: float = Field(default=0.9, ge=0, le=1)
    eta_lambda: float = Field(default=0.05, gt=0)
    lambda_init: float = 0.0
    lambda_min: float = -6.0
    lambda_max: float = 6.0
    constraint_interval: int = Field(default=10, ge=1)
    ema_decay: float = Field(default=0.95, ge=0, lt=1)
    warmup_window: int = Field(default=50, ge=1)
    warmup_tolerance: float = Field(default=0.01, gt=0)
    warmup_cap_fraction: float = Field(default=0.3, gt=0, le=1)
    warmup_value_window: int = Field(default=20, ge=1)
    lambda_update: MultiplierCadenceEnum = MultiplierCadenceEnum.PerEpoch

    @model_validator(mode="after")
    def validate_bounds(self) -> "CmdpSection":
        """Multiplier bounds must be ordered and contain the initial value"""
        if not self.lambda_min < self.lambda_max:
            raise ValueError("lambda_min must be < lambda_max")
        if not self.lambda_min <= self.lambda_init <= self.lambda_max:
            raise ValueError("lambda_init must lie within [lambda_min, lambda_max]")
        return self


class TrainSection(_Section):
    """PPO schedule and network sizes"""

    iterations: Optional[int] = Field(default=None, ge=1)
    num_envs: int = Field(default=16, ge=1)
    steps_per_env: int = Field(default=24, ge=1)
    epochs: int = Field(default=5, ge=1)
    minibatches: int = Field(default=4, ge=1)
    clip_range: float = Field(default=0.2, gt=0, lt=1)
    entropy_coef: float = Field(default=0.005, ge=0)
    gamma: float = Field(default=0.99, gt=0, lt=1)
    gae_lambda: float = Field(default=0.95, ge=0, le=1)
    learning_rate: float = Field(default=1e-3, gt=0)
    value_loss_coef: float = Field(default=1.0, ge=0)
    max_grad_norm: Optional[float] = Field(default=1.0, gt=0)
    policy_hidden: List[int] = Field(default=[64, 64])
    value_hidden: List[int] = Field(default=[64, 64])
    init_log_std: float = Field(default=0.0, ge=-4, le=1)
    seed: int = Field(default=0, ge=0)
    checkpoint_interval: int = Field(default=50, ge=1)
    eval_interval: int = Field(default=25, ge=0, description="0 disables in-training evaluation")
    eval_episodes: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def validate_minibatches(self) -> "TrainSection":
        """Minibatches must partition the buffer exactly"""
        capacity = self.num_envs * self.steps_per_env
        if capacity % self.minibatches != 0:
            raise ValueError(
                f"minibatches ({self.minibatches}) must divide num_envs*steps_per_env ({capacity})"
            )
        return self


class EvalSection(_Section):
    """Evaluation defaults"""

    episodes: int = Field(default=5, ge=1)
    deterministic: bool = True
    eta: Optional[float] = Field(default=None, gt=0)


_DEFAULT_ITERATIONS = {EnvIdEnum.PointReach: 300, EnvIdEnum.PlanarGait: 600}
_DEFAULT_STYLE = {EnvIdEnum.PointReach: StyleModeEnum.Tracking, EnvIdEnum.PlanarGait: StyleModeEnum.Adversarial}
_DEFAULT_ETA = {EnvIdEnum.PointReach: 2.0, EnvIdEnum.PlanarGait: 10.0}


class RunConfig(BaseSettings):
    """Complete, validated description of one training/evaluation run"""

    env: EnvIdEnum = EnvIdEnum.PointReach
    run_name: Optional[str] = None
    envs: EnvSection = Field(default_factory=EnvSection)
    demo: DemoSection = Field(default_factory=DemoSection)
    style: StyleSection = Field(default_factory=StyleSection)
    cmdp: CmdpSection = Field(default_factory=CmdpSection)
    train: TrainSection = Field(default_factory=TrainSection)
    eval: EvalSection = Field(default_factory=EvalSection)

    model_config = SettingsConfigDict(
        env_prefix="LAB_",
        env_nested_delimiter="__",
        extra="forbid",
    )

    @model_validator(mode="after")
    def validate_style(self) -> "RunConfig":
        """Cross-section checks"""
        if self.demo.source == DemoSourceEnum.File and not self.demo.path:
            raise ValueError("demo.path is required when demo.source = 'file'")
        return self

    # Resolved values

    @property
    def iterations(self) -> int:
        """Training iterations N (per-env default when unset)"""
        return self.train.iterations or _DEFAULT_ITERATIONS[self.env]

    @property
    def style_mode(self) -> StyleModeEnum:
        """Style pathway (per-env default when unset)"""
        return self.style.mode or _DEFAULT_STYLE[self.env]

    @property
    def eval_eta(self) -> float:
        """DTW normalization constant"""
        return self.eval.eta or _DEFAULT_ETA[self.env]

    @property
    def horizon(self) -> int:
        """Episode horizon of the selected environment"""
        if self.env == EnvIdEnum.PointReach:
            return self.envs.point_reach_horizon
        return self.envs.planar_gait_horizon

    @property
    def buffer_capacity(self) -> int:
        """Transitions per rollout"""
        return self.train.num_envs * self.train.steps_per_env

    @property
    def warmup_cap(self) -> int:
        """Maximum warm-up iterations"""
        return max(1, int(self.cmdp.warmup_cap_fraction * self.iterations))

    @property
    def display_name(self) -> str:
        """Run name used for directories and log context"""
        if self.run_name:
            return self.run_name
        return f"{self.env.value}_{self.cmdp.method.value}_a{self.cmdp.alpha:g}_s{self.train.seed}"

    # Loading

    @classmethod
    def load(
        cls,
        path: Optional[Path] = None,
        overrides: Optional[Mapping[str, Any]] = None,
    ) -> "RunConfig":
        """
        Load and validate a run configuration.

        Args:
            path: TOML config file (optional)
            overrides: Dotted-key overrides, highest precedence

        Returns:
            Validated configuration

        Raises:
            NotFoundException: If the config file does not exist
            InvalidConfigurationException: If parsing or validation fails
        """
        data: Dict[str, Any] = {}
        if path is not None:
            path = Path(path)
            if not path.is_file():
                raise NotFoundException("Config file", str(path))
            try:
                data = TomlConfigSettingsSource(cls, toml_file=path)()
            except tomllib.TOMLDecodeError as e:
                raise InvalidConfigurationException(
                    f"Config file {path} is not valid TOML", {"toml": str(e)}
                ) from e
        for key, value in (overrides or {}).items():
            _assign_dotted(data, key, value)
        return cls.build(data)

    @classmethod
    def build(cls, data: Mapping[str, Any]) -> "RunConfig":
        """Validate a nested mapping, converting pydantic errors"""
        try:
            return cls(**data)
        except ValidationError as e:
            errors = {".".join(str(p) for p in err["loc"]) or "config": err["msg"] for err in e.errors()}
            raise InvalidConfigurationException("Invalid run configuration", errors) from e

    @classmethod
    def from_snapshot(cls, path: Path) -> "RunConfig":
        """Load a config.json snapshot written by a previous run"""
        path = Path(path)
        if not path.is_file():
            raise NotFoundException("Config snapshot", str(path))
        return cls.build(json.loads(path.read_text(encoding="utf-8")))

    def with_overrides(self, overrides: Mapping[str, Any]) -> "RunConfig":
        """Copy with dotted-key overrides applied and re-validated"""
        data = self.model_dump(mode="json")
        for key, value in overrides.items():
            _assign_dotted(data, key, value)
        return self.build(data)

    def snapshot(self) -> str:
        """JSON snapshot for the run directory"""
        return self.model_dump_json(indent=2)


def parse_override(item: str) -> Tuple[str, Any]:
    """
    Parse one ``key=value`` override; the value is read as a TOML literal
    and falls back to a plain string.
    """
    if "=" not in item:
        raise InvalidConfigurationException(
            f"Override '{item}' is not of the form key=value", {"override": item}
        )
    key, raw = item.split("=", 1)
    key = key.strip()
    raw = raw.strip()
    try:
        value = tomllib.loads(f"v = {raw}")["v"]
    except tomllib.TOMLDecodeError:
        value = raw
    return key, value


def parse_overrides(items: Sequence[str]) -> Dict[str, Any]:
    """Parse a list of ``key=value`` overrides"""
    return dict(parse_override(item) for item in items)


def _assign_dotted(data: Dict[str, Any], key: str, value: Any) -> None:
    parts = key.split(".")
    node = data
    for part in parts[:-1]:
        child = node.get(part)
        if not isinstance(child, dict):
            child = {}
            node[part] = child
        node = child
    node[parts[-1]] = value

"""Training data transfer objects"""

from typing import List, Optional

from pydantic import Field

from core.application.dto import DTO

METRICS_COLUMNS = [
    "iteration",
    "phase",
    "task_return",
    "task_return_ema",
    "style_return_window",
    "style_return_ema",
    "lambda",
    "sigma_lambda",
    "v_g_star",
    "constraint_residual",
    "policy_loss",
    "value_loss_task",
    "value_loss_style",
    "disc_demo_term",
    "disc_policy_term",
    "disc_gp_term",
    "clip_fraction",
    "kl",
    "gradient_overflows",
    "imitation_score",
]


class RolloutStats(DTO):
    """Episode accounting of one rollout"""
    transitions: int
    task_episode_returns: List[float] = Field(default_factory=list)
    style_episode_returns: List[float] = Field(default_factory=list)
    mean_task_reward: float
    mean_style_reward: float
    
    @property
    def task_window_return(self) -> Optional[float]:
        if not self.task_episode_returns:
            return None
        return sum(self.task_episode_returns) / len(self.task_episode_returns)
    
    @property
    def style_window_return(self) -> Optional[float]:
        if not self.style_episode_returns:
            return None
        return sum(self.style_episode_returns) / len(self.style_episode_returns)


class PpoStats(DTO):
    """Means over all minibatch updates of one iteration"""
    policy_loss: float
    value_loss_task: float
    value_loss_style: float
    kl: float
    clip_fraction: float
    updates: int


class IterationMetrics(DTO):
    """One metrics.csv row"""
    iteration: int
    phase: str
    task_return: Optional[float] = None
    task_return_ema: Optional[float] = None
    style_return_window: Optional[float] = None
    style_return_ema: Optional[float] = None
    # Multiplier after this iteration's epochs; sigma_lambda is the weight the iteration fused with.
    lambda_: Optional[float] = Field(default=None, alias="lambda")
    sigma_lambda: float
    v_g_star: Optional[float] = None
    constraint_residual: Optional[float] = None
    policy_loss: float
    value_loss_task: float
    value_loss_style: float
    disc_demo_term: Optional[float] = None
    disc_policy_term: Optional[float] = None
    disc_gp_term: Optional[float] = None
    clip_fraction: float
    kl: float
    gradient_overflows: int = 0
    imitation_score: Optional[float] = None
    
    model_config = {**DTO.model_config, "populate_by_name": True}
    
    def row(self) -> dict:
        return self.model_dump(by_alias=True)


class TrainingResult(DTO):
    run_dir: str
    iterations: int
    final_checkpoint: str
    final_task_return_ema: Optional[float] = None
    v_g_star: Optional[float] = None
    warmup_iterations: Optional[int] = None

"""Drives warm-up, multiplier and constraint updates across iterations"""

from typing import Dict, List, Optional

import numpy as np

from core.application.base_service import BaseService
from core.domain.enums import MultiplierCadenceEnum, TrainingMethodEnum, TrainingPhaseEnum
from core.domain.events import DomainEvent
from config.run_config import RunConfig
from ...domain.entities import LagrangianState
from ...domain.services import EmaStatistic, WarmupMonitor
from ...domain.value_objects import DualAdvantages

PINNED_TASK_WEIGHTS = {
    TrainingMethodEnum.TaskOnly: 1.0,
    TrainingMethodEnum.FixedW02: 0.8,
    TrainingMethodEnum.FixedW05: 0.5,
}


class ConstraintController(BaseService):
    """
    Owns the LagrangianState of a run together with the EMA task-return
    statistic and the warm-up monitor.
    
    Per iteration the trainer calls observe_rollout once, multiplier_step once
    per learning epoch, then end_iteration.
    """
    
    def __init__(
        self,
        state: LagrangianState,
        ema: EmaStatistic,
        monitor: WarmupMonitor,
        cadence: MultiplierCadenceEnum = MultiplierCadenceEnum.PerEpoch,
    ):
        super().__init__()
        self.state = state
        self.ema = ema
        self.monitor = monitor
        self.cadence = cadence
        self.last_window_return: Optional[float] = None
    
    @classmethod
    def for_config(cls, config: RunConfig) -> "ConstraintController":
        cmdp = config.cmdp
        pinned = PINNED_TASK_WEIGHTS.get(cmdp.method)
        state = LagrangianState(
            alpha=cmdp.alpha,
            eta=cmdp.eta_lambda,
            lambda_init=cmdp.lambda_init,
            lambda_min=cmdp.lambda_min,
            lambda_max=cmdp.lambda_max,
            constraint_interval=cmdp.constraint_interval,
            warmup=pinned is None,
            pinned_weight=pinned,
        )
        monitor = WarmupMonitor(
            window=cmdp.warmup_window,
            tolerance=cmdp.warmup_tolerance,
            cap=config.warmup_cap,
            value_window=cmdp.warmup_value_window,
        )
        return cls(state, EmaStatistic(cmdp.ema_decay), monitor, cmdp.lambda_update)
    
    @property
    def phase(self) -> TrainingPhaseEnum:
        return TrainingPhaseEnum.Warmup if self.state.warmup else TrainingPhaseEnum.Joint
    
    @property
    def v_g(self) -> Optional[float]:
        """Smoothed task-return statistic"""
        return self.ema.value
    
    @property
    def multiplier_active(self) -> bool:
        return not self.state.warmup and not self.state.is_baseline and self.state.v_g_star is not None
    
    def observe_rollout(self, episode_returns: List[float]) -> Optional[float]:
        """
        Fold the mean return of episodes completed in this rollout into the EMA.
        
        Returns:
            The window mean, or None when no episode completed
        """
        window = float(np.mean(episode_returns)) if episode_returns else None
        self.last_window_return = window
        self.ema.update(window)
        return window
    
    def combine(self, advantages: DualAdvantages) -> np.ndarray:
        return self.state.combine_advantages(advantages)
    
    def multiplier_step(self, epoch: int) -> None:
        """
        Multiplier update for one learning epoch (first epoch only if per-iteration).
        Skipped when no episode completed in this iteration's rollout.
        """
        if not self.multiplier_active or self.ema.value is None or self.last_window_return is None:
            return
        if self.cadence == MultiplierCadenceEnum.PerIteration and epoch > 0:
            return
        self.state.update_multiplier(self.ema.value)
    
    def end_iteration(self, iteration: int) -> None:
        """Warm-up bookkeeping, then the interval-gated constraint update"""
        if self.state.is_baseline:
            return
        if self.state.warmup:
            self.monitor.record(self.last_window_return, self.ema.value)
            if self.ema.value is not None and self.monitor.converged():
                value = self.monitor.converged_value()
                self.state.finish_warmup(value, iteration)
                self.logger.warning(
                    "Warm-up finished",
                    extra={"iteration": iteration, "v_g_star": value, "phase": TrainingPhaseEnum.Joint.value},
                )
            return
        if self.ema.value is not None and self.state.constraint_due(iteration):
            self.state.update_constraint(self.ema.value, iteration)
    
    def pull_events(self) -> List[DomainEvent]:
        return self.state.pull_domain_events()
    
    def named_arrays(self) -> Dict[str, np.ndarray]:
        """LagrangianState plus the statistics a resumed run needs"""
        return {
            **self.state.named_arrays("lagrangian"),
            "lagrangian.ema": np.array(np.nan if self.ema.value is None else self.ema.value),
            "lagrangian.warmup_returns": np.asarray(self.monitor.window_returns, dtype=np.float64),
            "lagrangian.warmup_ema": np.asarray(self.monitor.ema_history, dtype=np.float64),
        }
    
    def restore(self, arrays: Dict[str, np.ndarray]) -> None:
        self.state.restore(arrays, "lagrangian")
        ema = float(arrays["lagrangian.ema"])
        self.ema.value = None if np.isnan(ema) else ema
        self.monitor.window_returns = [float(v) for v in arrays["lagrangian.warmup_returns"]]
        self.monitor.ema_history = [float(v) for v in arrays["lagrangian.warmup_ema"]]

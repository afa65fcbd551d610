"""Bounded Lagrangian multiplier with an online task constraint"""

from typing import Dict, Optional

import numpy as np
from scipy.special import expit

from core.domain.base_aggregate import AggregateRoot
from core.exceptions import DomainException
from ..events.cmdp_events import ConstraintUpdatedEvent, MultiplierUpdatedEvent, WarmupFinishedEvent
from ..exceptions.cmdp_exceptions import MultiplierStateException, WarmupStateException
from ..value_objects.dual_advantages import DualAdvantages


class LagrangianState(AggregateRoot):
    """
    Multiplier lambda, threshold alpha and the best task value seen (v_g_star).

    The task weight is sigmoid(lambda), except during warm-up where it is
    exactly 1, and for fixed-weight baselines where it is pinned.
    v_g_star never decreases once seeded.
    """

    def __init__(
        self,
        alpha: float = 0.9,
        eta: float = 0.05,
        lambda_init: float = 0.0,
        lambda_min: float = -6.0,
        lambda_max: float = 6.0,
        constraint_interval: int = 10,
        warmup: bool = True,
        pinned_weight: Optional[float] = None,
    ):
        super().__init__()
        if not 0.0 <= alpha <= 1.0:
            raise DomainException("alpha must lie in [0, 1]", {"alpha": alpha})
        if not eta > 0 or not lambda_min < lambda_max or constraint_interval < 1:
            raise DomainException(
                "Invalid multiplier settings",
                {"eta": eta, "lambda_min": lambda_min, "lambda_max": lambda_max, "interval": constraint_interval},
            )
        if pinned_weight is not None and not 0.0 <= pinned_weight <= 1.0:
            raise DomainException("Pinned task weight must lie in [0, 1]", {"pinned_weight": pinned_weight})
        self.alpha = float(alpha)
        self.eta = float(eta)
        self.lambda_init = float(lambda_init)
        self.lambda_min = float(lambda_min)
        self.lambda_max = float(lambda_max)
        self.lam = float(np.clip(lambda_init, lambda_min, lambda_max))
        self.constraint_interval = int(constraint_interval)
        self.warmup = bool(warmup)
        self.pinned_weight = pinned_weight
        self.v_g_star: Optional[float] = None

    @property
    def sigma(self) -> float:
        """sigmoid(lambda) in (0, 1)"""
        return float(expit(self.lam))

    @property
    def task_weight(self) -> float:
        """Weight on the task advantage actually used for fusion"""
        if self.pinned_weight is not None:
            return self.pinned_weight
        if self.warmup:
            return 1.0
        return self.sigma

    @property
    def is_baseline(self) -> bool:
        return self.pinned_weight is not None

    def combine_advantages(self, advantages: DualAdvantages) -> np.ndarray:
        """w * A_task + (1 - w) * A_style with w = task_weight"""
        weight = self.task_weight
        return weight * advantages.task + (1.0 - weight) * advantages.style

    def residual(self, v_g_batch: float) -> float:
        """alpha * v_g_star - v_g; positive means the constraint is violated"""
        if self.v_g_star is None:
            return float("nan")
        return self.alpha * self.v_g_star - float(v_g_batch)

    def update_multiplier(self, v_g_batch: float) -> float:
        """
        lambda <- clip(lambda + eta * (alpha * v_g_star - v_g_batch), lambda_min, lambda_max)

        Raises:
            MultiplierStateException: During warm-up or before v_g_star is seeded
        """
        if self.warmup:
            raise MultiplierStateException("multiplier update during warm-up")
        if self.v_g_star is None:
            raise MultiplierStateException("v_g_star is not initialized")
        previous = self.lam
        residual = self.residual(v_g_batch)
        self.lam = float(np.clip(self.lam + self.eta * residual, self.lambda_min, self.lambda_max))
        self.add_domain_event(MultiplierUpdatedEvent(previous, self.lam, residual))
        self.increment_version()
        return self.lam

    def constraint_due(self, iteration: int) -> bool:
        return not self.warmup and iteration % self.constraint_interval == 0

    def update_constraint(self, v_g_batch: float, iteration: int) -> float:
        """
        v_g_star <- max(v_g_star, v_g_batch); an unseeded value is set directly.

        Raises:
            MultiplierStateException: iteration is not a multiple of the interval
        """
        if iteration % self.constraint_interval != 0:
            raise MultiplierStateException(
                f"constraint update at iteration {iteration}, interval is {self.constraint_interval}"
            )
        previous = self.v_g_star
        value = float(v_g_batch)
        self.v_g_star = value if previous is None else max(previous, value)
        if previous is not None and self.v_g_star > previous:
            self.add_domain_event(ConstraintUpdatedEvent(iteration, previous, self.v_g_star))
        self.increment_version()
        return self.v_g_star

    def finish_warmup(self, converged_task_value: float, iteration: int = -1) -> None:
        """
        Seed v_g_star from the warm-up policy and reset lambda to its initial value.

        Raises:
            WarmupStateException: Warm-up already finished
        """
        if not self.warmup:
            raise WarmupStateException("warm-up already finished")
        self.warmup = False
        self.v_g_star = float(converged_task_value)
        self.lam = float(np.clip(self.lambda_init, self.lambda_min, self.lambda_max))
        self.add_domain_event(WarmupFinishedEvent(iteration, self.v_g_star))
        self.increment_version()

    def named_arrays(self, prefix: str = "lagrangian") -> Dict[str, np.ndarray]:
        return {
            f"{prefix}.lambda": np.array(self.lam),
            f"{prefix}.alpha": np.array(self.alpha),
            f"{prefix}.v_g_star": np.array(np.nan if self.v_g_star is None else self.v_g_star),
            f"{prefix}.eta": np.array(self.eta),
            f"{prefix}.warmup": np.array(self.warmup),
            f"{prefix}.interval": np.array(self.constraint_interval, dtype=np.int64),
        }

    def restore(self, arrays: Dict[str, np.ndarray], prefix: str = "lagrangian") -> None:
        self.lam = float(arrays[f"{prefix}.lambda"])
        self.alpha = float(arrays[f"{prefix}.alpha"])
        v_g_star = float(arrays[f"{prefix}.v_g_star"])
        self.v_g_star = None if np.isnan(v_g_star) else v_g_star
        self.eta = float(arrays[f"{prefix}.eta"])
        self.warmup = bool(arrays[f"{prefix}.warmup"])
        self.constraint_interval = int(arrays[f"{prefix}.interval"])

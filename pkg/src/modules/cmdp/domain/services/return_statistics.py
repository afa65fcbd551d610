"""Task-return statistics driving the constraint"""

from typing import List, Optional

import numpy as np

from ..exceptions.cmdp_exceptions import WarmupStateException


class EmaStatistic:
    """Exponential moving average; the first observation initializes it"""
    
    def __init__(self, decay: float = 0.95):
        self.decay = float(decay)
        self.value: Optional[float] = None
    
    def update(self, observation: Optional[float]) -> Optional[float]:
        """Fold in one observation; None leaves the average unchanged"""
        if observation is None or np.isnan(observation):
            return self.value
        if self.value is None:
            self.value = float(observation)
        else:
            self.value = self.decay * self.value + (1.0 - self.decay) * float(observation)
        return self.value


class WarmupMonitor:
    """
    Decides when warm-up has converged and what task value it converged to.
    
    Warm-up ends once the EMA task return moved by less than `tolerance`
    (relative) over the last `window` iterations, or at `cap` iterations.
    """
    
    def __init__(self, window: int = 50, tolerance: float = 0.01, cap: int = 90, value_window: int = 20):
        self.window = int(window)
        self.tolerance = float(tolerance)
        self.cap = int(cap)
        self.value_window = int(value_window)
        self.window_returns: List[float] = []
        self.ema_history: List[float] = []
    
    def record(self, window_return: Optional[float], ema: Optional[float]) -> None:
        """Store one iteration's mean completed-episode return (NaN if none) and the EMA"""
        self.window_returns.append(np.nan if window_return is None else float(window_return))
        self.ema_history.append(np.nan if ema is None else float(ema))
    
    @property
    def iterations(self) -> int:
        return len(self.ema_history)
    
    def converged(self) -> bool:
        if self.iterations >= self.cap:
            return True
        if self.iterations <= self.window:
            return False
        now, before = self.ema_history[-1], self.ema_history[-1 - self.window]
        if np.isnan(now) or np.isnan(before):
            return False
        return abs(now - before) < self.tolerance * max(abs(before), 1e-8)
    
    def converged_value(self) -> float:
        """
        Mean per-iteration return over the last value_window iterations,
        falling back to the latest EMA when none of them completed an episode.
        
        Raises:
            WarmupStateException: No episode has completed at all
        """
        recent = np.asarray(self.window_returns[-self.value_window:], dtype=np.float64)
        if recent.size and np.any(~np.isnan(recent)):
            return float(np.nanmean(recent))
        finite = [v for v in self.ema_history if not np.isnan(v)]
        if not finite:
            raise WarmupStateException("no completed episode to seed the task constraint")
        return float(finite[-1])

"""Discriminator loss breakdown"""

from core.domain.value_objects import ValueObject


class DiscriminatorLosses(ValueObject):
    """Pre-step loss components of one discriminator update"""
    
    def __init__(self, demo_term: float, policy_term: float, gp_term: float, applied: bool = True):
        self.demo_term = float(demo_term)
        self.policy_term = float(policy_term)
        self.gp_term = float(gp_term)
        self.applied = bool(applied)
        self._seal()
    
    @property
    def total(self) -> float:
        return self.demo_term + self.policy_term + self.gp_term

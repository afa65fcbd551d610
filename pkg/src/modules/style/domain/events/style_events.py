"""Style domain events"""

from core.domain.events import DomainEvent


class DiscriminatorDivergedEvent(DomainEvent):
    """Discriminator loss was not finite; the update was skipped"""
    
    def __init__(self, demo_term: float, policy_term: float, gp_term: float):
        super().__init__(demo_term=demo_term, policy_term=policy_term, gp_term=gp_term)

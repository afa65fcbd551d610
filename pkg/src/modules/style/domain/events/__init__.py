"""Style domain events"""

from .style_events import DiscriminatorDivergedEvent

__all__ = ["DiscriminatorDivergedEvent"]

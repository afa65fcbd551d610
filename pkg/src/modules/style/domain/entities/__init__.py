"""Style entities"""

from .discriminator_head import DiscriminatorHead

__all__ = ["DiscriminatorHead"]

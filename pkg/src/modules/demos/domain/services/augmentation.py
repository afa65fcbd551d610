"""Symmetry augmentation of demonstration pairs"""

import numpy as np

from ..entities.demonstration_set import DemonstrationSet


def augment_symmetric(demo_set: DemonstrationSet) -> DemonstrationSet:
    """
    Original pairs followed by each operator's image of them; the result has
    pair_count * (len(group) + 1) pairs and keeps the group.
    """
    if not demo_set.group:
        return demo_set
    pairs = np.concatenate(
        [demo_set.pairs, *[op.pairs(demo_set.pairs) for op in demo_set.group]], axis=0
    )
    return DemonstrationSet(
        demo_set.trajectories,
        demo_set.group,
        pairs=pairs,
        augmentation_rounds=demo_set.augmentation_rounds + 1,
    )

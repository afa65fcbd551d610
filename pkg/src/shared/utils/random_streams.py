"""Seeded random streams"""

from typing import Dict, List

import numpy as np


class RandomStreams:
    """
    Named, independent random generators derived from one seed.
    
    Each consumer (network init, per-env resets, action sampling, minibatch
    shuffling, demo sampling) owns its stream so that adding draws in one place
    never shifts the numbers seen by another.
    """
    
    def __init__(self, seed: int, *entropy: int):
        """
        Args:
            seed: Run seed
            *entropy: Extra integers mixed into the root (e.g. resume iteration)
        """
        self._root = np.random.SeedSequence([int(seed), *[int(e) for e in entropy]])
        self._named: Dict[str, np.random.Generator] = {}
    
    def get(self, name: str) -> np.random.Generator:
        """
        Get (creating on first use) the generator for a name.
        
        Args:
            name: Stream name
            
        Returns:
            Generator bound to that name for the lifetime of this object
        """
        if name not in self._named:
            key = [int(b) for b in name.encode("utf-8")]
            seq = np.random.SeedSequence(self._root.entropy, spawn_key=(*self._root.spawn_key, *key))
            self._named[name] = np.random.Generator(np.random.PCG64(seq))
        return self._named[name]
    
    def env_streams(self, count: int) -> List[np.random.Generator]:
        """One generator per environment instance"""
        return [self.get(f"env/{i}") for i in range(count)]

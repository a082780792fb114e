# network/rng.py

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    """Seeded PCG64 generator; every stochastic operation goes through here."""
    if seed is None or int(seed) < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.Generator(np.random.PCG64(int(seed)))

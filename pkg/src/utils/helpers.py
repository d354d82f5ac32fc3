import os
from typing import Union

import numpy as np

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]

def ensure_directory_exists(directory: str) -> None:
    """Ensure directory exists, create if not"""
    os.makedirs(directory, exist_ok=True)

def make_rng(seed: SeedLike) -> np.random.Generator:
    """Generator from an int seed, a SeedSequence or an existing Generator"""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)

def derive_seed(seed: int, *keys: int) -> np.random.SeedSequence:
    """Independent, reproducible stream for (seed, keys...)"""
    return np.random.SeedSequence([int(seed), *[int(k) for k in keys]])

def format_float(value: float, digits: int = 6) -> str:
    """Short stable rendering for reports"""
    if value is None:
        return "-"
    if value == float('inf'):
        return "inf"
    if value == float('-inf'):
        return "-inf"
    return f"{value:.{digits}g}"

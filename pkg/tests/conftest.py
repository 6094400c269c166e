"""
Shared fixtures for the flagrep test suite.
"""
from functools import lru_cache

import numpy as np
import pytest

from services.cartan import RootSystem, build_root_system, cartan_matrix_from_label


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    """Cached root system for a type label; construction is deterministic."""
    return build_root_system(cartan_matrix_from_label(label))


@pytest.fixture
def rs():
    """Factory fixture: ``rs("A2")``."""
    return root_system


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


def brute_force_orbit(cartan_entries, coords):
    """Reflection closure of a weight in fundamental coordinates, with no library code."""
    n = len(cartan_entries)
    start = tuple(coords)
    seen = {start}
    stack = [start]
    while stack:
        point = stack.pop()
        for i in range(n):
            image = tuple(point[j] - point[i] * cartan_entries[i][j] for j in range(n))
            if image not in seen:
                seen.add(image)
                stack.append(image)
    return seen

import numpy as np
import pytest

from rsfradar import (
    RadarParams,
    TargetScene,
    Target,
    make_grid,
    scene_from_cells,
    scene_to_sparse_vector,
)
from rsfradar.harness import VA_CELLS


@pytest.fixture(scope="session")
def params():
    return RadarParams()


@pytest.fixture(scope="session")
def grid(params):
    return make_grid(params, 4, 20)


@pytest.fixture(scope="session")
def va_scene(grid):
    return scene_from_cells(VA_CELLS, grid)


@pytest.fixture(scope="session")
def truth(va_scene, grid):
    return tuple(sorted(va_scene.column_indices(grid)))


@pytest.fixture(scope="session")
def x_true(va_scene, grid):
    return scene_to_sparse_vector(va_scene, grid)


def rng(*key):
    """Deterministic generator for a test-local key."""
    return np.random.default_rng(np.random.SeedSequence(list(key)))

import random

import pytest

from src.config import FIXTURES_DIR
from src.core.carpet import CarpetSpec, profile
from src.tools.io_tools import read_carpet


@pytest.fixture
def ex17_D():
    return read_carpet(FIXTURES_DIR / "ex17_D.json")


@pytest.fixture
def ex17_Dprime():
    return read_carpet(FIXTURES_DIR / "ex17_Dprime.json")


@pytest.fixture
def ex18_D():
    return read_carpet(FIXTURES_DIR / "ex18_D.json")


@pytest.fixture
def ex18_Dprime():
    return read_carpet(FIXTURES_DIR / "ex18_Dprime.json")


@pytest.fixture
def full_grid():
    return read_carpet(FIXTURES_DIR / "full_grid.json")


@pytest.fixture
def regular_spec():
    # two occupied rows with two digits each
    return CarpetSpec(n=5, m=4, digits=((0, 0), (1, 0), (0, 1), (1, 1)))


def random_spec(rng: random.Random, n: int = None, m: int = None) -> CarpetSpec:
    """Random carpet on a small grid; the digit set is never empty"""
    if n is None:
        n = rng.randint(3, 12)
    if m is None:
        m = rng.randint(2, n - 1)
    cells = [(i, j) for i in range(n) for j in range(m)]
    size = rng.randint(1, len(cells))
    return CarpetSpec(n=n, m=m, digits=tuple(rng.sample(cells, size)))


@pytest.fixture
def random_profiles():
    """Factory for reproducible batches of random carpet profiles"""
    def make(count: int, seed: int = 1234, **shape):
        rng = random.Random(seed)
        return [profile(random_spec(rng, **shape)) for _ in range(count)]
    return make

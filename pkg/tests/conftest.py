"""Shared fixtures for the test suite."""

import pytest

from tdsynth.config import Config
from tdsynth.exact.matrix import normalize
from tdsynth.generators.gates import Generator, generator_matrix


# ---------------------------------------------------------------------------
# Standard matrices (all as entries / sqrt(2)^k)
# ---------------------------------------------------------------------------

K_ROWS = [
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, 1, -1, -1],
    [1, -1, -1, 1],
]

CCX_ROWS = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
CCX_ROWS[6][6] = CCX_ROWS[7][7] = 0
CCX_ROWS[6][7] = CCX_ROWS[7][6] = 1


@pytest.fixture
def k_matrix():
    return normalize(K_ROWS, 2)


@pytest.fixture
def hadamard():
    return normalize([[1, 1], [1, -1]], 1)


@pytest.fixture
def cx():
    return normalize(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], 0
    )


@pytest.fixture
def ccx():
    return normalize(CCX_ROWS, 0)


@pytest.fixture
def h02_h13():
    """H_[0,2]·H_[1,3] at n = 4; H_[0,2] alone has a sqrt(2) entry and is not in L_4."""
    return normalize(
        [[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, -1, 0], [0, 1, 0, -1]], 1
    )


@pytest.fixture
def ih4():
    return generator_matrix(Generator.ih(), 4)


@pytest.fixture(autouse=True)
def default_config(monkeypatch):
    """Every test starts from the built-in defaults, single-threaded."""
    monkeypatch.setattr("tdsynth.config._config", Config())

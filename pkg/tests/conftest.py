import os
from unittest.mock import patch

import numpy as np
import pytest

from src.classify.table import default_table
from src.config.config import Config
from src.engine.oracles import DEFAULT_NUMERICS
from src.models.matrix import RealMatrix
from src.models.pattern import SignPattern

def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="run the full-size acceptance checks")

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size acceptance check, needs --run-slow")

def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)

@pytest.fixture
def numerics():
    """Default oracle tolerances"""
    return DEFAULT_NUMERICS

@pytest.fixture
def config():
    """Configuration built from a clean environment"""
    with patch.dict(os.environ, {}, clear=True):
        return Config()

@pytest.fixture
def small_config(config, tmp_path):
    """Fast configuration for sampling-heavy code paths"""
    return config.override(
        samples=12,
        recipe_samples=5,
        workers=1,
        show_progress=False,
        output_directory=str(tmp_path),
    )

@pytest.fixture(scope="session")
def table():
    """Shipped classification table"""
    return default_table()

@pytest.fixture
def cycle3():
    """3-cycle permutation matrix"""
    return RealMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])

@pytest.fixture
def positive_matrix():
    """Entrywise positive 3x3 matrix"""
    return RealMatrix.from_rows([[1, 2, 1], [1, 1, 3], [2, 1, 1]])

@pytest.fixture
def example_pattern():
    """Irreducible pattern whose B_A is reducible"""
    return SignPattern.from_text("0+0/+0-/+0+")

@pytest.fixture
def converse_pattern():
    """DNA pattern whose B_A is nonetheless irreducible"""
    return SignPattern.from_text("0-0/-0+/+0+")

@pytest.fixture
def rng():
    return np.random.default_rng(12345)

"""
Shared fixtures: the packaged catalog, the example algebra files and a
seeded random generator.
"""

from pathlib import Path

import numpy as np
import pytest

from superschur.catalog import default_catalog
from superschur.config import seed_from_env

ALGEBRAS_DIR = Path(__file__).parent.parent / "algebras"


@pytest.fixture(scope="session")
def catalog():
    """The packaged catalog, validated on load."""
    return default_catalog()


@pytest.fixture(scope="session")
def algebras_dir():
    return ALGEBRAS_DIR


@pytest.fixture
def rng():
    """Generator seeded from SUPERSCHUR_SEED (default 0)."""
    return np.random.default_rng(seed_from_env())

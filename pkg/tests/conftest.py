import numpy as np
import pytest


@pytest.fixture
def rng():
    """Fuzz generator with a fixed seed so failures replay exactly."""
    return np.random.default_rng(20260815)

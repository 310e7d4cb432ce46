"""Test configuration and fixtures."""

import numpy as np
import pytest

from src.common import rng
from src.core.adapter import params_file
from src.core.domain import model as core_model
from src.dynamics.domain import model as dynamics_model


@pytest.fixture
def params() -> core_model.VehicleParams:
    """Default vehicle profile."""
    return params_file.default_params()


@pytest.fixture
def generator() -> np.random.Generator:
    """Seeded generator for tests that need noise."""
    return rng.make_stream(7, rng.Stream.MONTE_CARLO)


@pytest.fixture
def at_rest() -> dynamics_model.VehicleState:
    """Vehicle at the origin with zero velocity."""
    return dynamics_model.VehicleState.at_rest()

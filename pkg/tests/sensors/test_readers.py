"""Tests for the IMU, depth and DVL models."""

import math

import numpy as np
import pytest

from src.core.domain import model as core_model
from src.dynamics.domain import model as dynamics_model
from src.sensors.domain import model
from src.sensors.service import readers


def _state(**pose: float) -> dynamics_model.VehicleState:
    return dynamics_model.VehicleState(
        pose=core_model.Pose(**pose), nu=core_model.BodyVelocity(u=0.4, r=0.1), t=1.5
    )


class TestQuantizeDepth:
    """Tests for the 2 mm pressure-sensor grid."""

    @pytest.mark.parametrize(
        ("depth", "expected"),
        [(0.0, 0.0), (1.0009, 1.0), (1.0011, 1.002), (2.0, 2.0), (-0.3, 0.0)],
    )
    def test_rounds_onto_grid(self, depth: float, expected: float) -> None:
        assert readers.quantize_depth(depth) == pytest.approx(expected)

    def test_reading_counts(self) -> None:
        assert model.DepthReading(depth=0.5, timestamp=0.0).counts == 250


class TestSensorSuite:
    """Tests for SensorSuite."""

    def test_noiseless_readings_equal_truth(self) -> None:
        # Arrange
        suite = readers.SensorSuite(model.NoiseConfig.noiseless(), seed=3)
        state = _state(z=1.25, phi=0.1, psi=-0.4)

        # Act
        imu = suite.read_imu(state)
        dvl = suite.read_dvl(state)
        depth = suite.read_depth(state)

        # Assert
        assert imu is not None and dvl is not None
        assert imu.roll == pytest.approx(0.1)
        assert imu.yaw == pytest.approx(-0.4)
        assert imu.r == pytest.approx(0.1)
        assert dvl.u == pytest.approx(0.4)
        assert depth.depth == pytest.approx(1.25)
        assert imu.timestamp == 1.5

    def test_yaw_bias_is_added_and_wrapped(self) -> None:
        cfg = model.NoiseConfig.noiseless().model_copy(update={"yaw_bias": 0.5})
        suite = readers.SensorSuite(cfg, seed=0)

        imu = suite.read_imu(_state(psi=math.pi - 0.1))

        assert imu is not None
        assert imu.yaw == pytest.approx(-math.pi + 0.4)

    def test_same_seed_gives_same_noise(self) -> None:
        cfg = model.NoiseConfig()
        first = readers.SensorSuite(cfg, seed=11)
        second = readers.SensorSuite(cfg, seed=11)
        state = _state(z=2.0)

        assert [first.read_imu(state) for _ in range(5)] == [second.read_imu(state) for _ in range(5)]
        assert [first.read_depth(state) for _ in range(5)] == [
            second.read_depth(state) for _ in range(5)
        ]

    def test_dropout_returns_none(self) -> None:
        # Arrange
        cfg = model.NoiseConfig.noiseless().model_copy(update={"dropout": 0.5})
        suite = readers.SensorSuite(cfg, seed=1)

        # Act
        readings = [suite.read_dvl(_state()) for _ in range(200)]

        # Assert
        dropped = sum(reading is None for reading in readings)
        assert 50 < dropped < 150

    def test_dropout_must_be_below_one(self) -> None:
        with pytest.raises(ValueError):
            model.NoiseConfig(dropout=1.0)


class TestNoiseStatistics:
    """Sample moments of the additive noise over many draws."""

    DRAWS = 5000

    def test_imu_noise_is_zero_mean_with_configured_spread(self, generator: np.random.Generator) -> None:
        # Arrange
        cfg = model.NoiseConfig()
        state = _state(phi=0.1, psi=-0.4)

        # Act
        readings = [readers.imu_read(state, cfg, generator) for _ in range(self.DRAWS)]

        # Assert
        roll_error = np.array([reading.roll for reading in readings if reading]) - 0.1
        rate_error = np.array([reading.r for reading in readings if reading]) - 0.1
        assert abs(roll_error.mean()) < 4 * cfg.attitude_sigma / math.sqrt(self.DRAWS)
        assert roll_error.std() == pytest.approx(cfg.attitude_sigma, rel=0.05)
        assert abs(rate_error.mean()) < 4 * cfg.rate_sigma / math.sqrt(self.DRAWS)
        assert rate_error.std() == pytest.approx(cfg.rate_sigma, rel=0.05)

    def test_dvl_noise_is_zero_mean_with_configured_spread(self, generator: np.random.Generator) -> None:
        cfg = model.NoiseConfig()
        state = _state()

        readings = [readers.dvl_read(state, cfg, generator) for _ in range(self.DRAWS)]

        surge_error = np.array([reading.u for reading in readings if reading]) - 0.4
        assert abs(surge_error.mean()) < 4 * cfg.dvl_sigma / math.sqrt(self.DRAWS)
        assert surge_error.std() == pytest.approx(cfg.dvl_sigma, rel=0.05)

    def test_depth_noise_averages_out_on_the_grid(self, generator: np.random.Generator) -> None:
        cfg = model.NoiseConfig()

        depths = np.array(
            [readers.depth_read(1.25, cfg, generator).depth for _ in range(self.DRAWS)]
        )

        assert abs(depths.mean() - 1.25) < 4 * model.DEPTH_RESOLUTION / math.sqrt(self.DRAWS)
        assert np.allclose(np.round(depths / model.DEPTH_RESOLUTION) * model.DEPTH_RESOLUTION, depths)

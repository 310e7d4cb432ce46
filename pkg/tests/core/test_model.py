"""Tests for core vehicle value types."""

import math

import pydantic
import pytest

from src.core.domain import model


class TestPose:
    """Tests for Pose."""

    def test_yaw_and_roll_are_wrapped(self) -> None:
        pose = model.Pose(phi=3 * math.pi / 2, psi=-3 * math.pi / 2)

        assert pose.phi == pytest.approx(-math.pi / 2)
        assert pose.psi == pytest.approx(math.pi / 2)

    def test_non_finite_position_is_rejected(self) -> None:
        with pytest.raises(pydantic.ValidationError):
            model.Pose(x=math.inf)

    def test_array_round_trip(self) -> None:
        pose = model.Pose(x=1.0, y=-2.0, z=3.0, phi=0.1, theta=-0.2, psi=0.3)

        assert model.Pose.from_array(pose.as_array()) == pose

    def test_pose_is_immutable(self) -> None:
        pose = model.Pose()

        with pytest.raises(pydantic.ValidationError):
            pose.x = 1.0  # type: ignore[misc]


class TestVehicleParams:
    """Tests for VehicleParams and its hydrostatics."""

    def test_net_heave_before_ballast(self) -> None:
        """Dry mass 26.4 kg against 35 kg displaced leaves 84.37 N of lift."""
        # Arrange
        params = model.VehicleParams(mass=26.4, displaced_mass=35.0, ballast_mass=0.0)

        # Act
        net = params.buoyancy - params.weight

        # Assert
        assert net == pytest.approx(84.37, abs=0.01)

    def test_default_profile_is_slightly_positive(self, params: model.VehicleParams) -> None:
        assert params.is_positively_buoyant
        assert params.buoyancy - params.weight < 5.0

    def test_negative_damping_is_rejected(self) -> None:
        with pytest.raises(pydantic.ValidationError):
            model.VehicleParams(d_quad=(-1.0, 0, 0, 0, 0, 0))

    def test_zero_mass_is_rejected(self) -> None:
        with pytest.raises(pydantic.ValidationError):
            model.VehicleParams(mass=0.0)

    def test_surge_and_sway_drag_match_measured_points(self, params: model.VehicleParams) -> None:
        """10.8 N at 0.6 m/s surge and 6.02 N at 0.3 m/s sway."""
        assert params.d_quad[0] * 0.6**2 == pytest.approx(10.8)
        assert params.d_quad[1] * 0.3**2 == pytest.approx(6.02, rel=1e-3)


class TestSimConfig:
    """Tests for SimConfig."""

    def test_steps_from_duration(self) -> None:
        assert model.SimConfig(dt=0.01, duration=300.0).steps == 30000

    def test_dt_above_bound_is_rejected(self) -> None:
        with pytest.raises(pydantic.ValidationError):
            model.SimConfig(dt=0.1)

    def test_thrust_vector_exceeds(self) -> None:
        thrusts = model.ThrustVector(t=(0, 0, 0, 0, 0, 0, 0, 25.0))

        assert thrusts.exceeds(20.0)
        assert not model.ThrustVector.zero().exceeds(20.0)

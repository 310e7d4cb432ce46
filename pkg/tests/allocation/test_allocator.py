"""Tests for thruster allocation."""

import numpy as np
import pytest

from src import exceptions
from src.allocation.domain import model
from src.allocation.service import allocator
from src.core.domain import model as core_model


@pytest.fixture
def matrix(params: core_model.VehicleParams) -> model.AllocationMatrix:
    return model.AllocationMatrix.from_params(params)


class TestAllocate:
    """Tests for the minimum-norm inverse allocation."""

    def test_pure_surge_splits_evenly(self, matrix: model.AllocationMatrix) -> None:
        allocation = allocator.allocate(core_model.GeneralizedForce(tau_x=2.0), matrix, 20.0)

        assert allocation.thrusts.t == pytest.approx((1, 1, 0, 0, 0, 0, 0, 0))
        assert allocation.scale == 1.0

    def test_random_feasible_wrenches_round_trip(
        self, matrix: model.AllocationMatrix, generator: np.random.Generator
    ) -> None:
        # Arrange
        wrenches = generator.uniform(-5.0, 5.0, size=(1000, 6))

        for tau in wrenches:
            # Act
            thrusts, scale = allocator.allocate_array(tau, matrix, t_max=1e6)

            # Assert
            assert scale == 1.0
            assert np.max(np.abs(matrix.b @ thrusts - tau)) < 1e-9

    def test_matches_least_squares_minimum_norm(
        self, matrix: model.AllocationMatrix, generator: np.random.Generator
    ) -> None:
        for tau in generator.uniform(-5.0, 5.0, size=(100, 6)):
            thrusts, _ = allocator.allocate_array(tau, matrix, t_max=1e6)
            oracle = np.linalg.lstsq(matrix.b, tau, rcond=None)[0]

            assert np.max(np.abs(thrusts - oracle)) < 1e-8

    def test_saturation_scales_uniformly(self, matrix: model.AllocationMatrix) -> None:
        # Arrange: 100 N surge needs 50 N per thruster
        tau = core_model.GeneralizedForce(tau_x=100.0, tau_psi=1.0)

        # Act
        allocation = allocator.allocate(tau, matrix, 20.0)

        # Assert
        assert allocation.saturated
        assert max(abs(t) for t in allocation.thrusts.t) == pytest.approx(20.0)
        produced = allocator.forward(allocation.thrusts, matrix).as_array()
        assert produced == pytest.approx(tau.as_array() * allocation.scale)

    def test_zero_lever_arm_is_rank_deficient(self) -> None:
        matrix = model.AllocationMatrix(l1=0.0, l2=0.2, l3=0.3, l4=0.3)

        with pytest.raises(exceptions.RankDeficiencyError):
            allocator.allocate(core_model.GeneralizedForce(tau_x=1.0), matrix, 20.0)


class TestForward:
    """Tests for the forward map."""

    def test_heave_thrusters_sum(self, matrix: model.AllocationMatrix) -> None:
        thrusts = core_model.ThrustVector(t=(0, 0, 0, 0, 1, 1, 1, 1))

        wrench = allocator.forward(thrusts, matrix)

        assert wrench.tau_z == pytest.approx(4.0)
        assert wrench.tau_phi == pytest.approx(0.0)
        assert wrench.tau_theta == pytest.approx(0.0)

    def test_matrix_is_read_only(self, matrix: model.AllocationMatrix) -> None:
        with pytest.raises(ValueError):
            matrix.b[0, 0] = 2.0

"""Forward and inverse thruster allocation."""

import logging

import numpy as np
import scipy.linalg

from src.allocation.domain import model
from src.core.domain import model as core_model

logger = logging.getLogger(__name__)


def forward_array(thrusts: np.ndarray, matrix: model.AllocationMatrix) -> np.ndarray:
    return matrix.b @ thrusts


def forward(
    thrusts: core_model.ThrustVector, matrix: model.AllocationMatrix
) -> core_model.GeneralizedForce:
    """tau = B T."""
    return core_model.GeneralizedForce.from_array(forward_array(thrusts.as_array(), matrix))


def allocate_array(
    tau: np.ndarray, matrix: model.AllocationMatrix, t_max: float
) -> tuple[np.ndarray, float]:
    matrix.require_full_rank()
    b = matrix.b
    # B B^T is symmetric positive definite whenever every lever arm is positive
    gram = b @ b.T
    thrusts = b.T @ scipy.linalg.solve(gram, tau, assume_a="pos")
    peak = float(np.max(np.abs(thrusts))) if thrusts.size else 0.0
    if peak <= t_max:
        return thrusts, 1.0
    scale = t_max / peak
    logger.debug("Allocation saturated: peak %.3f N, scale %.4f", peak, scale)
    return thrusts * scale, scale


def allocate(
    tau: core_model.GeneralizedForce, matrix: model.AllocationMatrix, t_max: float
) -> model.Allocation:
    """Minimum-norm thrusts T = B^T (B B^T)^-1 tau, uniformly scaled to respect t_max."""
    thrusts, scale = allocate_array(tau.as_array(), matrix, t_max)
    return model.Allocation(thrusts=core_model.ThrustVector.from_array(thrusts), scale=scale)

"""Exponential blob-size to distance mapping."""

import math
from collections.abc import Sequence

import numpy as np

from src import exceptions
from src.vision.domain import model


def calibrate(points: Sequence[tuple[float, float]]) -> model.Calibration:
    """Least squares on ln d = ln alpha - beta * dim."""
    if len(points) < 2:
        raise exceptions.ValidationError("calibration needs at least two points")
    dims = np.array([float(dim) for dim, _ in points])
    distances = np.array([float(distance) for _, distance in points])
    if np.unique(dims).size < 2:
        raise exceptions.ValidationError("calibration points need distinct blob dimensions")
    if np.any(distances <= 0) or np.any(dims <= 0):
        raise exceptions.ValidationError("calibration dimensions and distances must be positive")
    slope, intercept = np.polyfit(dims, np.log(distances), 1)
    return model.Calibration(alpha=math.exp(intercept), beta=-slope)


def estimate_distance(blob_dim: float, calibration: model.Calibration) -> float:
    if blob_dim <= 0:
        raise exceptions.ValidationError(f"blob dimension must be positive, got {blob_dim}")
    return calibration.alpha * math.exp(-calibration.beta * blob_dim)

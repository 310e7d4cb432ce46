"""Angle helpers shared by kinematics, control and sensing."""

import math

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_angle(angle: float) -> float:
    """Wrap an angle to (-pi, pi]; in-range angles come back unchanged."""
    if -math.pi < angle <= math.pi:
        return float(angle)
    wrapped = math.pi - math.fmod(math.pi - angle, TWO_PI)
    if wrapped > math.pi:
        wrapped -= TWO_PI
    elif wrapped <= -math.pi:
        wrapped += TWO_PI
    return wrapped


def wrap_angles(values: np.ndarray) -> np.ndarray:
    """Vectorised wrap_angle."""
    values = np.asarray(values, dtype=float)
    in_range = (values > -math.pi) & (values <= math.pi)
    return np.where(in_range, values, math.pi - np.mod(math.pi - values, TWO_PI))


def shortest_angle(target: float, current: float) -> float:
    """Signed difference target - current along the shorter arc."""
    return wrap_angle(target - current)

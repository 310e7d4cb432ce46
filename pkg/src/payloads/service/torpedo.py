"""Torpedo launch and hit testing."""

import logging

import numpy as np

from src import exceptions
from src.common import types as common_types
from src.core.service import kinematics
from src.dynamics.domain import model as dynamics_model
from src.payloads.domain import model
from src.payloads.service import ballistics, dropper

logger = logging.getLogger(__name__)

MUZZLE_SPEED = 3.0
LAUNCHER_OFFSET: common_types.Vector3 = (0.3, 0.0, 0.1)


def launch_torpedo(
    vehicle: dynamics_model.VehicleState,
    muzzle_speed: float = MUZZLE_SPEED,
    offset: common_types.Vector3 = LAUNCHER_OFFSET,
    spec: model.ProjectileSpec = model.TORPEDO,
) -> model.Projectile:
    """Fire along the vehicle's body x axis at ``muzzle_speed`` relative to the hull."""
    if muzzle_speed <= 0:
        raise exceptions.ValidationError(f"muzzle speed must be positive, got {muzzle_speed}")
    axis = kinematics.body_to_world(vehicle.pose, np.array([1.0, 0.0, 0.0]))
    position = vehicle.pose.position + kinematics.body_to_world(vehicle.pose, np.asarray(offset))
    velocity = kinematics.body_to_world(vehicle.pose, vehicle.nu.linear) + muzzle_speed * axis
    logger.info("Torpedo launched heading %s", np.round(axis, 3).tolist())
    return dropper.spawn(spec, model.ProjectileKind.TORPEDO, position, velocity, axis=axis)


def hits(
    torpedo: model.Projectile,
    target_center: tuple[float, float, float],
    target_normal: tuple[float, float, float],
    radius: float,
    dt: float = 0.005,
    max_time: float = 10.0,
) -> bool:
    """True when the torpedo crosses the target plane within ``radius`` of its centre."""
    crossing = ballistics.fly_to_plane(torpedo, target_center, target_normal, dt, max_time)
    if crossing is None:
        return False
    miss = float(np.linalg.norm(crossing - np.asarray(target_center)))
    logger.debug("Torpedo crossed target plane %.3f m from centre", miss)
    return miss <= radius

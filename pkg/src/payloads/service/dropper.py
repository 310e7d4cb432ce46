"""Single-actuator marker dropper."""

import logging
import math

import numpy as np

from src import exceptions
from src.common import types as common_types
from src.core.service import kinematics
from src.dynamics.domain import model as dynamics_model
from src.payloads.domain import model

logger = logging.getLogger(__name__)

SERVO_STEP = math.pi / 2.0
DEFAULT_OFFSET: common_types.Vector3 = (0.0, 0.0, 0.2)


def spawn(
    spec: model.ProjectileSpec,
    kind: model.ProjectileKind,
    position: np.ndarray,
    velocity: np.ndarray,
    axis: np.ndarray | None = None,
) -> model.Projectile:
    return model.Projectile(
        kind=kind,
        position=position,
        velocity=velocity,
        diameter=spec.diameter,
        mass=spec.mass,
        drag_coeff=spec.drag_coeff,
        net_force=spec.net_force,
        net_buoyancy_sign=spec.net_buoyancy_sign,
        axis=axis,
        length=spec.length,
        cross_drag_coeff=spec.cross_drag_coeff,
    )


def drop(
    state: model.DropperState,
    vehicle: dynamics_model.VehicleState | None = None,
    offset: common_types.Vector3 = DEFAULT_OFFSET,
    spec: model.ProjectileSpec = model.MARKER,
) -> tuple[model.DropperState, model.Projectile]:
    """Release exactly one ball; the ledge holds the other back."""
    if state.empty:
        raise exceptions.InvalidStateError("dropper is empty")
    vehicle = vehicle or dynamics_model.VehicleState()
    position = vehicle.pose.position + kinematics.body_to_world(vehicle.pose, np.asarray(offset))
    velocity = kinematics.body_to_world(vehicle.pose, vehicle.nu.linear)
    next_state = model.DropperState(
        balls_remaining=state.balls_remaining - 1, servo_angle=state.servo_angle + SERVO_STEP
    )
    logger.info("Marker dropped at %s, %d left", np.round(position, 3).tolist(), next_state.balls_remaining)
    return next_state, spawn(spec, model.ProjectileKind.MARKER, position, velocity)

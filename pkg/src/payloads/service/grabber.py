"""Scissor-lift grabber with a fixed actuation delay."""

import logging

import numpy as np

from src import exceptions
from src.common import types as common_types
from src.core.service import kinematics
from src.dynamics.domain import model as dynamics_model
from src.payloads.domain import model

logger = logging.getLogger(__name__)

ACTUATION_DELAY = 1.0
GRABBER_OFFSET: common_types.Vector3 = (0.0, 0.0, 0.25)


def command(
    state: model.GrabberState, cmd: model.GrabberCommand, delay: float = ACTUATION_DELAY
) -> model.GrabberState:
    """Queue ``cmd``; it takes effect ``delay`` seconds later in ``advance``."""
    if state.busy:
        raise exceptions.InvalidStateError(f"grabber is still executing {state.pending.action}")
    if cmd.action in (model.GrabberAction.EXTEND, model.GrabberAction.RETRACT):
        target = cmd.target
        if target is None:
            target = model.GRABBER_MAX_EXTENSION if cmd.action == model.GrabberAction.EXTEND else 0.0
        if not 0.0 <= target <= model.GRABBER_MAX_EXTENSION:
            raise exceptions.ValidationError(
                f"extension {target} m is outside [0, {model.GRABBER_MAX_EXTENSION}]"
            )
        cmd = cmd.model_copy(update={"target": target})
    return state.model_copy(update={"pending": cmd, "remaining": delay})


def advance(
    state: model.GrabberState, dt: float, object_distance: float | None = None
) -> model.GrabberState:
    """Count down the pending command and apply it once the delay has elapsed.

    ``object_distance`` is the distance from the fingertips to the nearest
    grabbable object, or None when there is none.
    """
    if not state.busy:
        return state
    remaining = state.remaining - dt
    if remaining > 1e-12:
        return state.model_copy(update={"remaining": remaining})

    cmd = state.pending
    update: dict = {"pending": None, "remaining": 0.0}
    match cmd.action:
        case model.GrabberAction.EXTEND | model.GrabberAction.RETRACT:
            update["lift_extension"] = cmd.target
        case model.GrabberAction.OPEN:
            update["fingers"] = model.FingerState.OPEN
            update["holding"] = False
        case model.GrabberAction.CLOSE:
            update["fingers"] = model.FingerState.CLOSED
            update["holding"] = object_distance is not None and object_distance <= model.GRAB_RADIUS
    next_state = state.model_copy(update=update)
    logger.info(
        "Grabber %s done: extension %.2f m, holding=%s",
        cmd.action,
        next_state.lift_extension,
        next_state.holding,
    )
    return next_state


def fingertip_position(
    state: model.GrabberState,
    vehicle: dynamics_model.VehicleState,
    offset: common_types.Vector3 = GRABBER_OFFSET,
) -> np.ndarray:
    """World position of the fingers; the lift extends along body +z."""
    local = np.asarray(offset) + np.array([0.0, 0.0, state.lift_extension])
    return vehicle.pose.position + kinematics.body_to_world(vehicle.pose, local)

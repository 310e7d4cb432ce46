"""Six independent PID loops driving the vehicle toward a MotionGoal."""

import logging
from collections.abc import Mapping

import numpy as np

from src.common import angles
from src.control.domain import model
from src.control.service import pid
from src.core.domain import model as core_model
from src.core.service import kinematics

logger = logging.getLogger(__name__)

Gains = Mapping[model.Axis, model.PidGains]
States = Mapping[model.Axis, model.PidState]


def compute_errors(
    current: core_model.Pose, nu: core_model.BodyVelocity, goal: model.MotionGoal
) -> np.ndarray:
    """Per-axis errors: position in the current body frame, attitude as wrapped differences.

    Disabled axes report zero; ``nu`` is not used by the position loops.
    """
    del nu
    enabled = goal.enabled_axes
    errors = np.zeros(6)

    world = np.array(
        [
            0.0 if goal.x is None else goal.x - current.x,
            0.0 if goal.y is None else goal.y - current.y,
            0.0 if goal.z is None else goal.z - current.z,
        ]
    )
    if world.any():
        body = kinematics.world_to_body(current, world)
        for axis in (model.Axis.SURGE, model.Axis.SWAY, model.Axis.HEAVE):
            if axis in enabled:
                errors[axis.index] = body[axis.index]

    for axis, target, value in (
        (model.Axis.ROLL, goal.phi, current.phi),
        (model.Axis.PITCH, goal.theta, current.theta),
        (model.Axis.YAW, goal.psi, current.psi),
    ):
        if target is not None:
            errors[axis.index] = angles.shortest_angle(target, value)
    return errors


def control_step(
    goal: model.MotionGoal,
    gains: Gains,
    states: States,
    pose: core_model.Pose,
    nu: core_model.BodyVelocity,
    dt: float,
    mask: frozenset[model.Axis] | None = None,
) -> tuple[core_model.GeneralizedForce, dict[model.Axis, model.PidState]]:
    """Run all six loops on the same sample; disabled loops output zero and reset.

    ``mask`` switches loops off even when the goal gives them a setpoint.
    """
    errors = compute_errors(pose, nu, goal)
    enabled = goal.enabled_axes if mask is None else goal.enabled_axes & mask
    wrench = np.zeros(6)
    next_states: dict[model.Axis, model.PidState] = {}
    for axis in model.Axis:
        if axis not in enabled:
            next_states[axis] = model.PidState()
            continue
        output, next_states[axis] = pid.pid_step(
            gains[axis], states.get(axis, model.PidState()), float(errors[axis.index]), dt
        )
        wrench[axis.index] = output
    return core_model.GeneralizedForce.from_array(wrench), next_states


class MotionController:
    """Owns the six loop states between control ticks."""

    def __init__(self, gains: Gains | None = None) -> None:
        self._gains: dict[model.Axis, model.PidGains] = {**model.DEFAULT_GAINS, **(gains or {})}
        self._states: dict[model.Axis, model.PidState] = {axis: model.PidState() for axis in model.Axis}

    @property
    def gains(self) -> dict[model.Axis, model.PidGains]:
        return dict(self._gains)

    @property
    def states(self) -> dict[model.Axis, model.PidState]:
        return dict(self._states)

    def reset(self) -> None:
        self._states = {axis: model.PidState() for axis in model.Axis}

    def step(
        self,
        goal: model.MotionGoal,
        pose: core_model.Pose,
        nu: core_model.BodyVelocity,
        dt: float,
        mask: frozenset[model.Axis] | None = None,
    ) -> core_model.GeneralizedForce:
        wrench, self._states = control_step(goal, self._gains, self._states, pose, nu, dt, mask)
        return wrench

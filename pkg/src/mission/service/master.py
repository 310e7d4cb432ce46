"""Master layer: transit motions between tasks and the per-task switches."""

import math

from src.common import angles
from src.control.domain import model as control_model
from src.core.domain import model as core_model
from src.mission.domain import model
from src.mission.domain.status import TransitMotion
from src.mission.service import navigation

POSITION_TOLERANCE = 0.1
HEADING_TOLERANCE = 0.05


def transit_goal(transit: model.Transit, start: core_model.Pose) -> control_model.MotionGoal:
    """Goal for one transit motion, holding every other degree of freedom at ``start``."""
    origin = (start.x, start.y, start.z)
    match transit.motion:
        case TransitMotion.SURGE:
            point = navigation.target_frame_point(origin, start.psi, (transit.setpoint, 0.0, 0.0))
            return control_model.MotionGoal(
                x=float(point[0]), y=float(point[1]), z=start.z, phi=0.0, theta=0.0, psi=start.psi
            )
        case TransitMotion.SWAY:
            point = navigation.target_frame_point(origin, start.psi, (0.0, transit.setpoint, 0.0))
            return control_model.MotionGoal(
                x=float(point[0]), y=float(point[1]), z=start.z, phi=0.0, theta=0.0, psi=start.psi
            )
        case TransitMotion.HEAVE:
            return control_model.MotionGoal(
                x=start.x, y=start.y, z=transit.setpoint, phi=0.0, theta=0.0, psi=start.psi
            )
        case _:
            return control_model.MotionGoal(
                x=start.x, y=start.y, z=start.z, phi=0.0, theta=0.0, psi=angles.wrap_angle(transit.setpoint)
            )


def transit_reached(
    transit: model.Transit, goal: control_model.MotionGoal, pose: core_model.Pose
) -> bool:
    match transit.motion:
        case TransitMotion.SURGE | TransitMotion.SWAY:
            return math.hypot(goal.x - pose.x, goal.y - pose.y) < POSITION_TOLERANCE
        case TransitMotion.HEAVE:
            return abs(goal.z - pose.z) < POSITION_TOLERANCE
        case _:
            return abs(angles.shortest_angle(goal.psi, pose.psi)) < HEADING_TOLERANCE

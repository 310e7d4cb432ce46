"""Z-Y-X Euler kinematics."""

import math

import numpy as np

from src import exceptions
from src.core.domain import model


def check_pitch(theta: float) -> None:
    """Raise SingularityError outside the band where the Euler map is defined."""
    if not -model.PITCH_LIMIT < theta < model.PITCH_LIMIT:
        raise exceptions.SingularityError(
            f"pitch {theta:.4f} rad is outside (-{model.PITCH_LIMIT:.4f}, {model.PITCH_LIMIT:.4f})"
        )


def rotation_matrix(phi: float, theta: float, psi: float) -> np.ndarray:
    """Body-to-world rotation R = Rz(psi) Ry(theta) Rx(phi)."""
    cphi, sphi = math.cos(phi), math.sin(phi)
    cth, sth = math.cos(theta), math.sin(theta)
    cpsi, spsi = math.cos(psi), math.sin(psi)
    return np.array(
        [
            [cpsi * cth, -spsi * cphi + cpsi * sth * sphi, spsi * sphi + cpsi * cphi * sth],
            [spsi * cth, cpsi * cphi + sphi * sth * spsi, -cpsi * sphi + sth * spsi * cphi],
            [-sth, cth * sphi, cth * cphi],
        ]
    )


def attitude_rate_matrix(phi: float, theta: float) -> np.ndarray:
    """Map from body angular rates (p, q, r) to Euler angle rates."""
    cphi, sphi = math.cos(phi), math.sin(phi)
    cth, tth = math.cos(theta), math.tan(theta)
    return np.array(
        [
            [1.0, sphi * tth, cphi * tth],
            [0.0, cphi, -sphi],
            [0.0, sphi / cth, cphi / cth],
        ]
    )


def pose_rate_array(eta: np.ndarray, nu: np.ndarray) -> np.ndarray:
    """eta_dot = J(eta) nu on raw arrays, for the integrator hot path."""
    phi, theta, psi = eta[3], eta[4], eta[5]
    check_pitch(theta)
    rate = np.empty(6)
    rate[:3] = rotation_matrix(phi, theta, psi) @ nu[:3]
    rate[3:] = attitude_rate_matrix(phi, theta) @ nu[3:]
    return rate


def euler_kinematics(pose: model.Pose, nu: model.BodyVelocity) -> model.PoseRate:
    """World-frame pose rate from body-frame velocity."""
    rate = pose_rate_array(pose.as_array(), nu.as_array())
    return model.PoseRate(
        x_dot=float(rate[0]),
        y_dot=float(rate[1]),
        z_dot=float(rate[2]),
        phi_dot=float(rate[3]),
        theta_dot=float(rate[4]),
        psi_dot=float(rate[5]),
    )


def body_to_world(pose: model.Pose, vector: np.ndarray) -> np.ndarray:
    return rotation_matrix(pose.phi, pose.theta, pose.psi) @ np.asarray(vector, dtype=float)


def world_to_body(pose: model.Pose, vector: np.ndarray) -> np.ndarray:
    return rotation_matrix(pose.phi, pose.theta, pose.psi).T @ np.asarray(vector, dtype=float)

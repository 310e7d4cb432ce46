"""Hydrostatic, hydrodynamic and rigid-body coupling wrenches.

Each function returns the wrench acting on the vehicle in the body frame,
so the equation of motion reads M nu_dot = thrust + restoring + damping + coriolis.
"""

import math

import numpy as np

from src.core.domain import model as core_model
from src.core.service import kinematics


def _cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.array(
        [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    )


def restoring_array(eta: np.ndarray, params: core_model.VehicleParams) -> np.ndarray:
    phi, theta = eta[3], eta[4]
    # world z axis expressed in body coordinates: third row of R
    down = np.array(
        [-math.sin(theta), math.cos(theta) * math.sin(phi), math.cos(theta) * math.cos(phi)]
    )
    f_gravity = params.weight * down
    f_buoyancy = -params.buoyancy * down
    wrench = np.empty(6)
    wrench[:3] = f_gravity + f_buoyancy
    wrench[3:] = _cross(params.r_cg, f_gravity) + _cross(params.r_cb, f_buoyancy)
    return wrench


def damping_array(nu: np.ndarray, params: core_model.VehicleParams) -> np.ndarray:
    d_lin = np.asarray(params.d_lin)
    d_quad = np.asarray(params.d_quad)
    return -(d_lin + d_quad * np.abs(nu)) * nu


def coriolis_array(nu: np.ndarray, params: core_model.VehicleParams) -> np.ndarray:
    if not params.coriolis_enabled:
        return np.zeros(6)
    velocity, omega = nu[:3], nu[3:]
    inertia = np.array([params.inertia_xx, params.inertia_yy, params.inertia_zz])
    c_nu = np.empty(6)
    c_nu[:3] = params.total_mass * _cross(omega, velocity)
    c_nu[3:] = _cross(omega, inertia * omega)
    return -c_nu


def restoring_force(
    pose: core_model.Pose, params: core_model.VehicleParams
) -> core_model.GeneralizedForce:
    """Weight at r_cg and buoyancy at r_cb, rotated into the body frame."""
    kinematics.check_pitch(pose.theta)
    return core_model.GeneralizedForce.from_array(restoring_array(pose.as_array(), params))


def damping_force(
    nu: core_model.BodyVelocity, params: core_model.VehicleParams
) -> core_model.GeneralizedForce:
    """Diagonal linear plus quadratic drag, -(d_lin + d_quad*|nu|)*nu per axis."""
    return core_model.GeneralizedForce.from_array(damping_array(nu.as_array(), params))


def coriolis_force(
    nu: core_model.BodyVelocity, params: core_model.VehicleParams
) -> core_model.GeneralizedForce:
    """-C(nu) nu for a diagonal rigid-body mass matrix; zero while disabled."""
    return core_model.GeneralizedForce.from_array(coriolis_array(nu.as_array(), params))

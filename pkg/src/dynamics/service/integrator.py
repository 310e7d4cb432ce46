"""Fixed-step integration of M nu_dot + C(nu)nu + D(nu)nu + g(eta) = tau."""

import math

import numpy as np

from src import exceptions
from src.allocation.domain import model as allocation_model
from src.allocation.service import allocator
from src.common import angles
from src.core.domain import model as core_model
from src.core.service import kinematics
from src.dynamics.domain import model
from src.dynamics.service import forces


def derivative(
    x: np.ndarray, tau_thrust: np.ndarray, params: core_model.VehicleParams, m_inv: np.ndarray
) -> np.ndarray:
    """Time derivative of the stacked state [eta, nu] under a constant thrust wrench."""
    eta, nu = x[:6], x[6:]
    x_dot = np.empty(12)
    x_dot[:6] = kinematics.pose_rate_array(eta, nu)
    tau = (
        tau_thrust
        + forces.restoring_array(eta, params)
        + forces.damping_array(nu, params)
        + forces.coriolis_array(nu, params)
    )
    x_dot[6:] = m_inv * tau
    return x_dot


def advance(
    x: np.ndarray,
    tau_thrust: np.ndarray,
    params: core_model.VehicleParams,
    dt: float,
    integrator: core_model.Integrator = core_model.Integrator.RK4,
) -> np.ndarray:
    """One step on the raw 12-vector; angles wrapped, pitch and velocity checked."""
    m_inv = 1.0 / params.mass_matrix_diagonal()
    if integrator == core_model.Integrator.EULER:
        x_next = x + dt * derivative(x, tau_thrust, params, m_inv)
    else:
        k1 = derivative(x, tau_thrust, params, m_inv)
        k2 = derivative(x + 0.5 * dt * k1, tau_thrust, params, m_inv)
        k3 = derivative(x + 0.5 * dt * k2, tau_thrust, params, m_inv)
        k4 = derivative(x + dt * k3, tau_thrust, params, m_inv)
        x_next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    x_next[3] = angles.wrap_angle(x_next[3])
    x_next[5] = angles.wrap_angle(x_next[5])
    kinematics.check_pitch(x_next[4])
    _check_divergence(x_next[6:], params)
    return x_next


def _check_divergence(nu: np.ndarray, params: core_model.VehicleParams) -> None:
    if not np.all(np.isfinite(nu)):
        raise exceptions.DivergenceError("body velocity is no longer finite")
    speed = math.hypot(nu[0], nu[1], nu[2])
    rate = math.hypot(nu[3], nu[4], nu[5])
    if speed > params.velocity_limit:
        raise exceptions.DivergenceError(
            f"linear speed {speed:.3f} m/s exceeds the {params.velocity_limit} m/s limit"
        )
    if rate > params.rate_limit:
        raise exceptions.DivergenceError(
            f"angular rate {rate:.3f} rad/s exceeds the {params.rate_limit} rad/s limit"
        )


def step(
    state: model.VehicleState,
    thrusts: core_model.ThrustVector,
    params: core_model.VehicleParams,
    dt: float,
    integrator: core_model.Integrator = core_model.Integrator.RK4,
) -> model.VehicleState:
    """Advance the vehicle by one fixed step with the thrusts held constant."""
    if not 0 < dt <= 0.05:
        raise exceptions.ValidationError(f"dt must be in (0, 0.05] s, got {dt}")
    matrix = allocation_model.AllocationMatrix.from_params(params)
    tau_thrust = allocator.forward_array(thrusts.as_array(), matrix)
    x = np.concatenate([state.pose.as_array(), state.nu.as_array()])
    x_next = advance(x, tau_thrust, params, dt, integrator)
    return model.VehicleState(
        pose=core_model.Pose.from_array(x_next[:6]),
        nu=core_model.BodyVelocity.from_array(x_next[6:]),
        t=state.t + dt,
    )

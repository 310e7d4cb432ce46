"""Discrete PID with clamped integrator."""

from src import exceptions
from src.control.domain import model


def _clamp(value: float, low: float, high: float) -> float:
    return min(max(value, low), high)


def pid_step(
    gains: model.PidGains, state: model.PidState, error: float, dt: float
) -> tuple[float, model.PidState]:
    """One update: integrate then clamp, backward-difference derivative, clamp output."""
    if dt <= 0:
        raise exceptions.ValidationError(f"dt must be positive, got {dt}")
    derivative = (error - state.prev_error) / dt if state.initialized else 0.0
    integral = _clamp(state.integral + error * dt, gains.i_min, gains.i_max)
    output = gains.kp * error + gains.ki * integral + gains.kd * derivative
    output = _clamp(output, gains.out_min, gains.out_max)
    return output, model.PidState(integral=integral, prev_error=error, initialized=True)

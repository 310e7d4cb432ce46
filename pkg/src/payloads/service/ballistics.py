"""Projectile integration and trajectory queries."""

import numpy as np

from src import exceptions
from src.core.domain import model as core_model
from src.payloads.domain import model


def acceleration(p: model.Projectile, velocity: np.ndarray) -> np.ndarray:
    rho = core_model.WATER_DENSITY
    force = p.net_force_vector.copy()
    if p.axis is None:
        speed = float(np.linalg.norm(velocity))
        force -= 0.5 * rho * p.drag_coeff * p.frontal_area * speed * velocity
    else:
        axis = np.asarray(p.axis)
        axial = float(velocity @ axis) * axis
        cross = velocity - axial
        force -= 0.5 * rho * p.drag_coeff * p.frontal_area * np.linalg.norm(axial) * axial
        force -= 0.5 * rho * p.cross_drag_coeff * p.side_area * np.linalg.norm(cross) * cross
    return force / p.mass


def projectile_step(p: model.Projectile, dt: float) -> model.Projectile:
    """RK4 step of m v_dot = F_net - drag."""
    if dt <= 0:
        raise exceptions.ValidationError(f"dt must be positive, got {dt}")
    x0, v0 = np.asarray(p.position), np.asarray(p.velocity)
    k1x, k1v = v0, acceleration(p, v0)
    k2x, k2v = v0 + 0.5 * dt * k1v, acceleration(p, v0 + 0.5 * dt * k1v)
    k3x, k3v = v0 + 0.5 * dt * k2v, acceleration(p, v0 + 0.5 * dt * k2v)
    k4x, k4v = v0 + dt * k3v, acceleration(p, v0 + dt * k3v)
    x1 = x0 + dt / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x)
    v1 = v0 + dt / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
    return p.with_motion(x1, v1)


def mechanical_energy(p: model.Projectile) -> float:
    """Kinetic energy plus potential of the constant net force."""
    velocity = np.asarray(p.velocity)
    return 0.5 * p.mass * float(velocity @ velocity) - float(p.net_force_vector @ np.asarray(p.position))


def terminal_speed(p: model.Projectile) -> float:
    """Closed-form sink or rise speed of an unfinned projectile."""
    return float(np.sqrt(2.0 * p.net_force / (core_model.WATER_DENSITY * p.drag_coeff * p.frontal_area)))


def signed_distance(position: np.ndarray, point: np.ndarray, normal: np.ndarray) -> float:
    return float((position - point) @ normal)


def plane_crossing(
    before: np.ndarray, after: np.ndarray, point: np.ndarray, normal: np.ndarray
) -> np.ndarray | None:
    """Interpolated point where the segment before -> after meets the plane, if it does."""
    d0 = signed_distance(before, point, normal)
    d1 = signed_distance(after, point, normal)
    if d0 == 0.0:
        return before.copy()
    if (d0 < 0.0) == (d1 < 0.0) and d1 != 0.0:
        return None
    return before + d0 / (d0 - d1) * (after - before)


def fly_to_plane(
    p: model.Projectile,
    point: tuple[float, float, float],
    normal: tuple[float, float, float],
    dt: float,
    max_time: float,
) -> np.ndarray | None:
    """Integrate until the projectile crosses the plane; the crossing point or None."""
    anchor, unit = np.asarray(point, dtype=float), np.asarray(normal, dtype=float)
    unit = unit / np.linalg.norm(unit)
    current = p
    for _ in range(int(np.ceil(max_time / dt))):
        following = projectile_step(current, dt)
        crossing = plane_crossing(
            np.asarray(current.position), np.asarray(following.position), anchor, unit
        )
        if crossing is not None:
            return crossing
        current = following
    return None


def landing_point(p: model.Projectile, floor_z: float, dt: float, max_time: float = 120.0) -> np.ndarray | None:
    """Where a sinking projectile meets the horizontal plane z = floor_z."""
    return fly_to_plane(p, (0.0, 0.0, floor_z), (0.0, 0.0, 1.0), dt, max_time)

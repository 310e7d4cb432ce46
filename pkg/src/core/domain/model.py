"""Core vehicle value types.

All types are immutable: state changes return new instances.
"""

import enum
import math
from typing import Self

import numpy as np
import pydantic

from src.common import angles
from src.common import types as common_types

GRAVITY = 9.81
WATER_DENSITY = 1000.0
PITCH_LIMIT = math.pi / 2.0 - 0.01


class Pose(pydantic.BaseModel):
    """World-frame pose (NED, z positive down) with Z-Y-X Euler angles."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    phi: float = 0.0
    theta: float = 0.0
    psi: float = 0.0

    @pydantic.field_validator("phi", "psi")
    @classmethod
    def _wrap(cls, value: float) -> float:
        return angles.wrap_angle(value)

    @pydantic.field_validator("x", "y", "z", "theta")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("pose components must be finite")
        return value

    @property
    def position(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def attitude(self) -> np.ndarray:
        return np.array([self.phi, self.theta, self.psi])

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.phi, self.theta, self.psi])

    @classmethod
    def from_array(cls, values: np.ndarray) -> Self:
        x, y, z, phi, theta, psi = (float(v) for v in values)
        return cls(x=x, y=y, z=z, phi=phi, theta=theta, psi=psi)

    @property
    def pitch_in_band(self) -> bool:
        return -PITCH_LIMIT < self.theta < PITCH_LIMIT


class BodyVelocity(pydantic.BaseModel):
    """Body-frame velocity: surge, sway, heave and roll, pitch, yaw rates."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    u: float = 0.0
    v: float = 0.0
    w: float = 0.0
    p: float = 0.0
    q: float = 0.0
    r: float = 0.0

    @pydantic.field_validator("*")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("velocity components must be finite")
        return value

    @property
    def linear(self) -> np.ndarray:
        return np.array([self.u, self.v, self.w])

    @property
    def angular(self) -> np.ndarray:
        return np.array([self.p, self.q, self.r])

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.v, self.w, self.p, self.q, self.r])

    @classmethod
    def from_array(cls, values: np.ndarray) -> Self:
        u, v, w, p, q, r = (float(x) for x in values)
        return cls(u=u, v=v, w=w, p=p, q=q, r=r)


class PoseRate(pydantic.BaseModel):
    """Time derivative of a Pose."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    x_dot: float
    y_dot: float
    z_dot: float
    phi_dot: float
    theta_dot: float
    psi_dot: float

    def as_array(self) -> np.ndarray:
        return np.array(
            [self.x_dot, self.y_dot, self.z_dot, self.phi_dot, self.theta_dot, self.psi_dot]
        )


class GeneralizedForce(pydantic.BaseModel):
    """Six-axis wrench in the body frame: forces in N, moments in N*m."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    tau_x: float = 0.0
    tau_y: float = 0.0
    tau_z: float = 0.0
    tau_phi: float = 0.0
    tau_theta: float = 0.0
    tau_psi: float = 0.0

    @pydantic.field_validator("*")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("wrench components must be finite")
        return value

    def as_array(self) -> np.ndarray:
        return np.array(
            [self.tau_x, self.tau_y, self.tau_z, self.tau_phi, self.tau_theta, self.tau_psi]
        )

    @classmethod
    def from_array(cls, values: np.ndarray) -> Self:
        tx, ty, tz, tphi, ttheta, tpsi = (float(v) for v in values)
        return cls(tau_x=tx, tau_y=ty, tau_z=tz, tau_phi=tphi, tau_theta=ttheta, tau_psi=tpsi)

    def __add__(self, other: "GeneralizedForce") -> "GeneralizedForce":
        return GeneralizedForce.from_array(self.as_array() + other.as_array())


class ThrustVector(pydantic.BaseModel):
    """Individual thruster forces T1..T8 in newtons.

    Thrusters 1, 2 push in surge, 3, 4 in sway and 5 to 8 in heave.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    t: common_types.Vector8 = (0.0,) * 8

    def as_array(self) -> np.ndarray:
        return np.array(self.t)

    @classmethod
    def from_array(cls, values: np.ndarray) -> Self:
        return cls(t=tuple(float(v) for v in values))

    @classmethod
    def zero(cls) -> Self:
        return cls()

    def exceeds(self, t_max: float) -> bool:
        """True for an unconstrained vector that a thruster cannot deliver."""
        return any(abs(value) > t_max for value in self.t)


class VehicleParams(pydantic.BaseModel):
    """Rigid-body, hydrostatic, damping and thruster-geometry parameters."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    mass: float = pydantic.Field(default=26.4, gt=0)
    displaced_mass: float = pydantic.Field(default=35.0, gt=0)
    ballast_mass: float = pydantic.Field(default=8.4, ge=0)
    inertia_xx: float = pydantic.Field(default=1.5, gt=0)
    inertia_yy: float = pydantic.Field(default=1.5, gt=0)
    inertia_zz: float = pydantic.Field(default=1.5, gt=0)
    r_cg: common_types.Vector3 = (0.0, 0.0, 0.0)
    r_cb: common_types.Vector3 = (0.0, 0.0, -0.05)
    d_lin: common_types.Vector6 = (0.0,) * 6
    d_quad: common_types.Vector6 = (30.0, 66.89, 80.0, 5.0, 5.0, 5.0)
    l1: float = pydantic.Field(default=0.25, gt=0)
    l2: float = pydantic.Field(default=0.20, gt=0)
    l3: float = pydantic.Field(default=0.30, gt=0)
    l4: float = pydantic.Field(default=0.30, gt=0)
    t_max: float = pydantic.Field(default=20.0, gt=0)
    coriolis_enabled: bool = False
    velocity_limit: float = pydantic.Field(default=5.0, gt=0)
    rate_limit: float = pydantic.Field(default=5.0, gt=0)

    @pydantic.field_validator("d_lin", "d_quad")
    @classmethod
    def _non_negative_damping(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if any(v < 0 for v in value):
            raise ValueError("damping coefficients must be non-negative")
        return value

    @property
    def total_mass(self) -> float:
        """Mass in air including ballast, the rigid-body mass of the model."""
        return self.mass + self.ballast_mass

    @property
    def weight(self) -> float:
        return self.total_mass * GRAVITY

    @property
    def buoyancy(self) -> float:
        return self.displaced_mass * GRAVITY

    @property
    def is_positively_buoyant(self) -> bool:
        return self.buoyancy >= self.weight

    def mass_matrix_diagonal(self) -> np.ndarray:
        m = self.total_mass
        return np.array([m, m, m, self.inertia_xx, self.inertia_yy, self.inertia_zz])


class Integrator(enum.StrEnum):
    """Fixed-step integration scheme."""

    RK4 = "rk4"
    EULER = "euler"


class SimConfig(pydantic.BaseModel):
    """Fixed-step simulation settings."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    dt: float = pydantic.Field(default=0.01, gt=0, le=0.05)
    duration: float = pydantic.Field(default=300.0, gt=0)
    seed: int = pydantic.Field(default=0, ge=0, le=2**64 - 1)
    integrator: Integrator = Integrator.RK4

    @property
    def steps(self) -> int:
        return int(round(self.duration / self.dt))

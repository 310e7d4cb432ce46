"""Motion-control value types."""

import enum
import math
from typing import Self

import pydantic

from src.core.domain import model as core_model


class Axis(enum.StrEnum):
    """Controlled degrees of freedom, in wrench order."""

    SURGE = "surge"
    SWAY = "sway"
    HEAVE = "heave"
    ROLL = "roll"
    PITCH = "pitch"
    YAW = "yaw"

    @property
    def index(self) -> int:
        return list(Axis).index(self)

    @property
    def is_translational(self) -> bool:
        return self in (Axis.SURGE, Axis.SWAY, Axis.HEAVE)


class PidGains(pydantic.BaseModel):
    """Gains and clamps for one loop."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kp: float = 0.0
    ki: float = 0.0
    kd: float = 0.0
    out_min: float = -math.inf
    out_max: float = math.inf
    i_min: float = -math.inf
    i_max: float = math.inf

    @pydantic.model_validator(mode="after")
    def _check_limits(self) -> Self:
        if not self.out_min < self.out_max:
            raise ValueError("out_min must be below out_max")
        if not self.i_min <= 0.0 <= self.i_max:
            raise ValueError("integral clamp must bracket zero")
        return self

    @classmethod
    def symmetric(
        cls, kp: float, ki: float, kd: float, out_limit: float, i_limit: float = math.inf
    ) -> Self:
        return cls(
            kp=kp, ki=ki, kd=kd, out_min=-out_limit, out_max=out_limit, i_min=-i_limit, i_max=i_limit
        )


class PidState(pydantic.BaseModel):
    """Integrator and derivative memory of one loop."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    integral: float = 0.0
    prev_error: float = 0.0
    initialized: bool = False


DEFAULT_GAINS: dict[Axis, PidGains] = {
    Axis.SURGE: PidGains.symmetric(kp=40.0, ki=2.0, kd=20.0, out_limit=40.0, i_limit=2.0),
    Axis.SWAY: PidGains.symmetric(kp=40.0, ki=2.0, kd=30.0, out_limit=40.0, i_limit=2.0),
    Axis.HEAVE: PidGains.symmetric(kp=120.0, ki=10.0, kd=60.0, out_limit=80.0, i_limit=0.3),
    Axis.ROLL: PidGains.symmetric(kp=10.0, ki=0.0, kd=3.0, out_limit=20.0, i_limit=1.0),
    Axis.PITCH: PidGains.symmetric(kp=10.0, ki=0.0, kd=3.0, out_limit=20.0, i_limit=1.0),
    Axis.YAW: PidGains.symmetric(kp=8.0, ki=0.5, kd=4.0, out_limit=24.0, i_limit=1.0),
}


class MotionGoal(pydantic.BaseModel):
    """World-frame setpoints; an axis is enabled when its setpoint is given.

    x and y enable the surge and sway loops together, z enables heave and
    phi, theta, psi enable roll, pitch and yaw.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    x: float | None = None
    y: float | None = None
    z: float | None = None
    phi: float | None = None
    theta: float | None = None
    psi: float | None = None

    @pydantic.model_validator(mode="after")
    def _check_finite(self) -> Self:
        for name in ("x", "y", "z", "phi", "theta", "psi"):
            value = getattr(self, name)
            if value is not None and not math.isfinite(value):
                raise ValueError(f"setpoint {name} must be finite")
        return self

    @classmethod
    def from_pose(cls, pose: core_model.Pose) -> Self:
        """Goal that enables all six loops."""
        return cls(x=pose.x, y=pose.y, z=pose.z, phi=pose.phi, theta=pose.theta, psi=pose.psi)

    @property
    def enabled_axes(self) -> frozenset[Axis]:
        axes: set[Axis] = set()
        if self.x is not None or self.y is not None:
            axes.update((Axis.SURGE, Axis.SWAY))
        if self.z is not None:
            axes.add(Axis.HEAVE)
        if self.phi is not None:
            axes.add(Axis.ROLL)
        if self.theta is not None:
            axes.add(Axis.PITCH)
        if self.psi is not None:
            axes.add(Axis.YAW)
        return frozenset(axes)

    def merged(self, **updates: float | None) -> Self:
        return self.model_copy(update=updates)

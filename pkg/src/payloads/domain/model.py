"""Dropper, projectile and grabber state."""

import enum
import math
from typing import Self

import numpy as np
import pydantic

from src.common import types as common_types

MARKER_DIAMETER = 0.045
MARKER_CAPACITY = 2
GRABBER_MAX_EXTENSION = 0.30
GRAB_RADIUS = 0.06


class ProjectileKind(enum.StrEnum):
    MARKER = "marker"
    TORPEDO = "torpedo"


class BuoyancySign(enum.StrEnum):
    SINKS = "sinks"
    RISES = "rises"


class DropperState(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    balls_remaining: int = pydantic.Field(default=MARKER_CAPACITY, ge=0, le=MARKER_CAPACITY)
    servo_angle: float = 0.0

    @property
    def empty(self) -> bool:
        return self.balls_remaining == 0


class Projectile(pydantic.BaseModel):
    """Point mass under net gravity/buoyancy and quadratic drag (NED, z down).

    ``net_force`` is the magnitude of weight minus buoyancy; its direction
    follows ``net_buoyancy_sign``. A projectile with an ``axis`` has fins:
    drag along the axis uses ``drag_coeff`` on the frontal area and drag
    across it uses ``cross_drag_coeff`` on the side area.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kind: ProjectileKind
    position: common_types.Vector3
    velocity: common_types.Vector3
    diameter: float = pydantic.Field(gt=0)
    mass: float = pydantic.Field(gt=0)
    drag_coeff: float = pydantic.Field(ge=0)
    net_force: float = pydantic.Field(ge=0)
    net_buoyancy_sign: BuoyancySign
    axis: common_types.Vector3 | None = None
    length: float = pydantic.Field(default=0.0, ge=0)
    cross_drag_coeff: float = pydantic.Field(default=1.0, ge=0)

    @property
    def frontal_area(self) -> float:
        return math.pi * (self.diameter / 2.0) ** 2

    @property
    def side_area(self) -> float:
        return self.diameter * self.length

    @property
    def net_force_vector(self) -> np.ndarray:
        sign = 1.0 if self.net_buoyancy_sign == BuoyancySign.SINKS else -1.0
        return np.array([0.0, 0.0, sign * self.net_force])

    def with_motion(self, position: np.ndarray, velocity: np.ndarray) -> Self:
        return self.model_copy(
            update={
                "position": tuple(float(v) for v in position),
                "velocity": tuple(float(v) for v in velocity),
            }
        )


class ProjectileSpec(pydantic.BaseModel):
    """Physical constants of a projectile type."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    diameter: float = pydantic.Field(gt=0)
    mass: float = pydantic.Field(gt=0)
    drag_coeff: float = pydantic.Field(ge=0)
    net_force: float = pydantic.Field(ge=0)
    net_buoyancy_sign: BuoyancySign
    length: float = pydantic.Field(default=0.0, ge=0)
    cross_drag_coeff: float = pydantic.Field(default=1.0, ge=0)


MARKER = ProjectileSpec(
    diameter=MARKER_DIAMETER,
    mass=0.046,
    drag_coeff=0.47,
    net_force=0.05,
    net_buoyancy_sign=BuoyancySign.SINKS,
)

TORPEDO = ProjectileSpec(
    diameter=0.03,
    mass=0.25,
    drag_coeff=0.10,
    net_force=0.1,
    net_buoyancy_sign=BuoyancySign.RISES,
    length=0.15,
    cross_drag_coeff=1.0,
)


class FingerState(enum.StrEnum):
    OPEN = "open"
    CLOSED = "closed"


class GrabberAction(enum.StrEnum):
    EXTEND = "extend"
    RETRACT = "retract"
    OPEN = "open"
    CLOSE = "close"


class GrabberCommand(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    action: GrabberAction
    target: float | None = None


class GrabberState(pydantic.BaseModel):
    """Scissor lift and fingers; a command completes after ``remaining`` seconds."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    lift_extension: float = pydantic.Field(default=0.0, ge=0, le=GRABBER_MAX_EXTENSION)
    fingers: FingerState = FingerState.OPEN
    holding: bool = False
    pending: GrabberCommand | None = None
    remaining: float = pydantic.Field(default=0.0, ge=0)

    @pydantic.model_validator(mode="after")
    def _holding_closed(self) -> Self:
        if self.holding and self.fingers != FingerState.CLOSED:
            raise ValueError("holding requires closed fingers")
        return self

    @property
    def busy(self) -> bool:
        return self.pending is not None

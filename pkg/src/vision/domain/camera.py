"""Pinhole cameras and the world objects they can see."""

import enum
import math

import pydantic

from src.common import types as common_types


class CameraMount(enum.StrEnum):
    """Forward camera looks along body +x, downward camera along body +z."""

    FORWARD = "forward"
    DOWN = "down"


class CameraConfig(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    mount: CameraMount = CameraMount.FORWARD
    width: int = pydantic.Field(default=160, gt=0)
    height: int = pydantic.Field(default=120, gt=0)
    fov: float = pydantic.Field(default=math.pi / 2, gt=0, lt=math.pi)
    offset: common_types.Vector3 = (0.0, 0.0, 0.0)
    min_depth: float = pydantic.Field(default=0.1, gt=0)

    @property
    def focal(self) -> float:
        """Focal length in pixels from the horizontal field of view."""
        return (self.width / 2.0) / math.tan(self.fov / 2.0)

    @property
    def principal_point(self) -> tuple[float, float]:
        return ((self.width - 1) / 2.0, (self.height - 1) / 2.0)


class TargetKind(enum.StrEnum):
    GATE = "gate"
    BUOY = "buoy"
    BIN = "bin"
    PINGER = "pinger"
    OBJECT = "object"

    @property
    def camera(self) -> CameraMount | None:
        """Camera that sees this kind of target; None for invisible ones."""
        if self == TargetKind.PINGER:
            return None
        if self == TargetKind.BIN:
            return CameraMount.DOWN
        return CameraMount.FORWARD


class VisualTarget(pydantic.BaseModel):
    """A world object.

    ``size`` is the diameter for buoys and objects, the post spacing for
    gates and the side length for bins. ``height`` is the gate post height
    and ``post_width`` the post thickness. Gate posts sit on the line through
    ``position`` perpendicular to ``heading``.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    name: str
    kind: TargetKind
    position: common_types.Vector3
    size: float = pydantic.Field(default=0.4, gt=0)
    height: float = pydantic.Field(default=1.0, gt=0)
    post_width: float = pydantic.Field(default=0.1, gt=0)
    heading: float = 0.0
    color: common_types.Vector3 = (255.0, 80.0, 0.0)
    frequency: float | None = None

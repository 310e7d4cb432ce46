"""Image, scene and detection value types."""

import enum
import math
from typing import Annotated, Any, Literal, Self

import numpy as np
import pydantic

from src.common import types as common_types

Color = common_types.Vector3


class Image(pydantic.BaseModel):
    """8-bit image, row-major, shape (height, width) or (height, width, 3)."""

    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    data: np.ndarray

    @pydantic.field_validator("data", mode="before")
    @classmethod
    def _as_uint8(cls, value: Any) -> np.ndarray:
        array = np.asarray(value)
        if array.ndim == 3 and array.shape[2] == 1:
            array = array[:, :, 0]
        if array.ndim not in (2, 3) or (array.ndim == 3 and array.shape[2] != 3):
            raise ValueError(f"expected (h, w) or (h, w, 3) pixels, got shape {array.shape}")
        if array.shape[0] == 0 or array.shape[1] == 0:
            raise ValueError("image must not be empty")
        if array.dtype != np.uint8:
            if np.any(array < 0) or np.any(array > 255):
                raise ValueError("pixel values must lie in [0, 255]")
            array = array.astype(np.uint8)
        array = np.ascontiguousarray(array).copy()
        array.setflags(write=False)
        return array

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])

    @property
    def channels(self) -> int:
        return 1 if self.data.ndim == 2 else 3

    @classmethod
    def blank(cls, width: int, height: int, color: Color | float = 0.0) -> Self:
        if isinstance(color, (int, float)):
            return cls(data=np.full((height, width), int(round(color)), dtype=np.uint8))
        pixel = np.array([int(round(c)) for c in color], dtype=np.uint8)
        return cls(data=np.broadcast_to(pixel, (height, width, 3)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return np.array_equal(self.data, other.data) and self.data.shape == other.data.shape

    __hash__ = None  # type: ignore[assignment]


class DegradeConfig(pydantic.BaseModel):
    """Per-channel exponential attenuation toward the water's backlight colour."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    beta: common_types.Vector3 = (0.5, 0.12, 0.08)
    backlight: Color = (15.0, 80.0, 100.0)
    distance: float = pydantic.Field(default=0.0, ge=0)

    @pydantic.field_validator("beta")
    @classmethod
    def _non_negative(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if any(v < 0 for v in value):
            raise ValueError("attenuation coefficients must be non-negative")
        return value

    @pydantic.field_validator("backlight")
    @classmethod
    def _eight_bit(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if any(not 0 <= v <= 255 for v in value):
            raise ValueError("backlight must be 8-bit")
        return value


class DiskShape(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kind: Literal["disk"] = "disk"
    cx: float
    cy: float
    radius: float = pydantic.Field(gt=0)
    color: Color


class RectShape(pydantic.BaseModel):
    """Axis-aligned rectangle, corners inclusive."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kind: Literal["rect"] = "rect"
    x0: float
    y0: float
    x1: float
    y1: float
    color: Color

    @pydantic.model_validator(mode="after")
    def _ordered(self) -> Self:
        if self.x1 < self.x0 or self.y1 < self.y0:
            raise ValueError("rectangle corners must be ordered")
        return self


class GateShape(pydantic.BaseModel):
    """Two vertical posts centred on (cx, cy), ``span`` apart."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kind: Literal["gate"] = "gate"
    cx: float
    cy: float
    span: float = pydantic.Field(gt=0)
    height: float = pydantic.Field(gt=0)
    post_width: float = pydantic.Field(gt=0)
    color: Color

    def posts(self) -> tuple[RectShape, RectShape]:
        half_w = self.post_width / 2.0
        half_h = self.height / 2.0
        return tuple(  # type: ignore[return-value]
            RectShape(
                x0=x - half_w, y0=self.cy - half_h, x1=x + half_w, y1=self.cy + half_h, color=self.color
            )
            for x in (self.cx - self.span / 2.0, self.cx + self.span / 2.0)
        )


Shape = Annotated[DiskShape | RectShape | GateShape, pydantic.Field(discriminator="kind")]


class SceneSpec(pydantic.BaseModel):
    """Flat background with primitives drawn in order."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    width: int = pydantic.Field(gt=0)
    height: int = pydantic.Field(gt=0)
    background: Color = (40.0, 110.0, 130.0)
    shapes: tuple[Shape, ...] = ()


class DetectionMode(enum.StrEnum):
    CONTOUR = "contour"
    HOUGH = "hough"


class CenterMethod(enum.StrEnum):
    """How the centre of the selected blob is computed."""

    BOX = "box"
    ELLIPSE = "ellipse"
    WEIGHTED = "weighted"


class BlobDimension(enum.StrEnum):
    MAX = "max"
    WIDTH = "width"
    HEIGHT = "height"
    DIAGONAL = "diagonal"


class DetectConfig(pydantic.BaseModel):
    """Threshold ranges in HSV (hue in degrees, saturation and value in [0, 1]).

    A hue range with ``h_min > h_max`` wraps through 0. Grayscale images are
    thresholded on value alone.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    h_min: float = pydantic.Field(default=330.0, ge=0, lt=360)
    h_max: float = pydantic.Field(default=30.0, ge=0, lt=360)
    s_min: float = pydantic.Field(default=0.4, ge=0, le=1)
    s_max: float = pydantic.Field(default=1.0, ge=0, le=1)
    v_min: float = pydantic.Field(default=0.3, ge=0, le=1)
    v_max: float = pydantic.Field(default=1.0, ge=0, le=1)
    kernel: int = pydantic.Field(default=5, ge=1)
    iterations: int = pydantic.Field(default=1, ge=0)
    min_area: int = pydantic.Field(default=50, ge=1)
    mode: DetectionMode = DetectionMode.CONTOUR
    center_method: CenterMethod = CenterMethod.BOX
    blob_dim: BlobDimension = BlobDimension.MAX
    components: int = pydantic.Field(default=1, ge=1, le=2)

    @pydantic.model_validator(mode="after")
    def _ranges(self) -> Self:
        if self.s_min > self.s_max or self.v_min > self.v_max:
            raise ValueError("saturation and value ranges must be ordered")
        return self


Segment = tuple[tuple[int, int], tuple[int, int]]


class Detection(pydantic.BaseModel):
    """Detected blob in pixel coordinates (x right, y down)."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    center: tuple[float, float]
    blob_dim: float = pydantic.Field(gt=0)
    area: int = pydantic.Field(gt=0)
    bbox: tuple[int, int, int, int]
    lines: tuple[Segment, ...] | None = None
    distance: float | None = None

    def with_distance(self, distance: float) -> Self:
        return self.model_copy(update={"distance": distance})

    def report_line(self) -> str:
        distance = "-" if self.distance is None else f"{self.distance:.3f}"
        return f"{self.center[0]:.1f} {self.center[1]:.1f} {self.blob_dim:.1f} {distance}"


class Calibration(pydantic.BaseModel):
    """d = alpha * exp(-beta * blob_dim)."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    alpha: float = pydantic.Field(gt=0)
    beta: float

    @pydantic.field_validator("alpha", "beta")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("calibration must be finite")
        return value

"""Sensor readings and noise configuration."""

import math

import pydantic

from src.common import angles

DEPTH_RESOLUTION = 0.002


class NoiseConfig(pydantic.BaseModel):
    """Gaussian sigmas, IMU magnetic yaw bias and per-read dropout probability."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    attitude_sigma: float = pydantic.Field(default=0.005, ge=0)
    rate_sigma: float = pydantic.Field(default=0.002, ge=0)
    depth_sigma: float = pydantic.Field(default=0.001, ge=0)
    dvl_sigma: float = pydantic.Field(default=0.01, ge=0)
    yaw_bias: float = 0.0
    dropout: float = pydantic.Field(default=0.0, ge=0, lt=1)

    @classmethod
    def noiseless(cls) -> "NoiseConfig":
        return cls(attitude_sigma=0.0, rate_sigma=0.0, depth_sigma=0.0, dvl_sigma=0.0)


class ImuReading(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    roll: float
    pitch: float
    yaw: float
    p: float
    q: float
    r: float
    timestamp: float

    @pydantic.field_validator("roll", "yaw")
    @classmethod
    def _wrap(cls, value: float) -> float:
        return angles.wrap_angle(value)

    @pydantic.field_validator("pitch", "p", "q", "r", "timestamp")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("IMU values must be finite")
        return value


class DepthReading(pydantic.BaseModel):
    """Depth quantized to the pressure sensor's 2 mm resolution."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    depth: float = pydantic.Field(ge=0)
    timestamp: float

    @property
    def counts(self) -> int:
        return round(self.depth / DEPTH_RESOLUTION)


class DvlReading(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    u: float
    v: float
    w: float
    timestamp: float

    @pydantic.field_validator("*")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("DVL values must be finite")
        return value

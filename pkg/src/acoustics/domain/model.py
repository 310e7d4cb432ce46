"""Hydrophone array, trace and signal-chain value types."""

import itertools
import math
from typing import Any, Self

import numpy as np
import pydantic

from src.common import types as common_types

SOUND_SPEED = 1500.0
HYDROPHONE_COUNT = 4


class ArrayGeometry(pydantic.BaseModel):
    """Four hydrophones in the body frame.

    ``x_pair`` and ``y_pair`` name the two orthogonal baselines used for the
    bearing; the default square puts h0-h1 along body x and h0-h3 along body y.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    positions: tuple[common_types.Vector3, ...]
    sound_speed: float = pydantic.Field(default=SOUND_SPEED, gt=0)
    x_pair: tuple[int, int] = (0, 1)
    y_pair: tuple[int, int] = (0, 3)

    @pydantic.model_validator(mode="after")
    def _check_positions(self) -> Self:
        if len(self.positions) != HYDROPHONE_COUNT:
            raise ValueError(f"expected {HYDROPHONE_COUNT} hydrophones")
        for a, b in itertools.combinations(self.positions, 2):
            if math.dist(a, b) < 1e-9:
                raise ValueError("hydrophone positions must be pairwise distinct")
        for pair in (self.x_pair, self.y_pair):
            if pair[0] == pair[1] or not all(0 <= i < HYDROPHONE_COUNT for i in pair):
                raise ValueError(f"invalid hydrophone pair {pair}")
        return self

    @classmethod
    def square(cls, side: float = 0.2, sound_speed: float = SOUND_SPEED) -> Self:
        half = side / 2.0
        return cls(
            positions=(
                (-half, -half, 0.0),
                (half, -half, 0.0),
                (half, half, 0.0),
                (-half, half, 0.0),
            ),
            sound_speed=sound_speed,
        )

    def position(self, index: int) -> np.ndarray:
        return np.asarray(self.positions[index])

    def pair_vector(self, pair: tuple[int, int]) -> np.ndarray:
        return self.position(pair[1]) - self.position(pair[0])

    def baseline(self, pair: tuple[int, int]) -> float:
        return float(np.linalg.norm(self.pair_vector(pair)))

    def max_delay(self, pair: tuple[int, int]) -> float:
        return self.baseline(pair) / self.sound_speed


class Trace(pydantic.BaseModel):
    """Uniformly sampled signal; samples are held read-only."""

    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    samples: np.ndarray
    fs: float = pydantic.Field(gt=0)

    @pydantic.field_validator("samples", mode="before")
    @classmethod
    def _as_array(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=float).ravel()
        if not np.all(np.isfinite(array)):
            raise ValueError("trace samples must be finite")
        array.setflags(write=False)
        return array

    def __len__(self) -> int:
        return int(self.samples.size)

    @property
    def duration(self) -> float:
        return len(self) / self.fs

    def with_samples(self, samples: np.ndarray) -> Self:
        return type(self)(samples=samples, fs=self.fs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trace):
            return NotImplemented
        return self.fs == other.fs and np.array_equal(self.samples, other.samples)

    __hash__ = None  # type: ignore[assignment]


class AnalogChainConfig(pydantic.BaseModel):
    """Preamplifier, low-pass filter and ADC driver stage."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    gain1: float = pydantic.Field(default=50.0, gt=0)
    lpf_order: int = pydantic.Field(default=6, ge=1)
    lpf_cutoff: float = pydantic.Field(default=37_500.0, gt=0)
    gain2: float = pydantic.Field(default=0.4, gt=0)

    @property
    def passband_gain(self) -> float:
        return self.gain1 * self.gain2


class AdcConfig(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    bits: int = pydantic.Field(default=16, ge=2, le=32)
    full_scale: float = pydantic.Field(default=2.5, gt=0)
    fs: float = pydantic.Field(default=1_000_000.0, gt=0)

    @property
    def max_code(self) -> int:
        return 2 ** (self.bits - 1) - 1

    @property
    def lsb(self) -> float:
        return self.full_scale / self.max_code


class PingConfig(pydantic.BaseModel):
    """Pinger waveform and recording window.

    Amplitude at a hydrophone is ``source_level / r`` volts; noise is white
    Gaussian at ``snr_db`` relative to the RMS of a ping of that amplitude.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    frequency: float = pydantic.Field(default=30_000.0, gt=0)
    duration: float = pydantic.Field(default=0.004, gt=0)
    interval: float = pydantic.Field(default=1.0, gt=0)
    taper: float = pydantic.Field(default=0.1, ge=0, le=1)
    source_level: float = pydantic.Field(default=0.01, gt=0)
    snr_db: float | None = 20.0
    pre_trigger: float = pydantic.Field(default=0.0005, ge=0)
    record_length: float = pydantic.Field(default=0.006, gt=0)


class AcousticHeading(pydantic.BaseModel):
    """Body-frame bearing to the pinger.

    ``azimuth`` is measured from body +x toward +y. ``elevation`` is the
    angle between the array plane and the ray to the pinger, present only
    when elevation estimation is enabled.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    azimuth: float
    elevation: float | None = None
    cos_x: float
    cos_y: float
    delays: tuple[float, float]

    @property
    def azimuth_deg(self) -> float:
        return math.degrees(self.azimuth)

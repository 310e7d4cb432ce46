"""Acoustics command schemas."""

import pydantic


class LocatePinger(pydantic.BaseModel):
    """Command to estimate the bearing from a directory of traces."""

    traces_dir: str
    side: float = pydantic.Field(default=0.2, gt=0)
    sound_speed: float = pydantic.Field(default=1500.0, gt=0)
    elevation: bool = False


class SynthesizePing(pydantic.BaseModel):
    """Command to write synthetic traces for a pinger at a bearing."""

    out_dir: str
    azimuth_deg: float = 0.0
    distance: float = pydantic.Field(default=20.0, gt=0)
    depth_below: float = 0.0
    snr_db: float | None = 20.0
    seed: int = pydantic.Field(default=0, ge=0)
    side: float = pydantic.Field(default=0.2, gt=0)
    condition: bool = True


class EvaluateHeading(pydantic.BaseModel):
    """Command to run the Monte-Carlo bearing evaluation."""

    azimuths_deg: tuple[float, ...] = (0.0, 30.0, -30.0, 60.0, -60.0)
    snr_db: tuple[float, ...] = (20.0,)
    draws: int = pydantic.Field(default=200, ge=1)
    seed: int = pydantic.Field(default=0, ge=0)
    side: float = pydantic.Field(default=0.2, gt=0)
    jobs: int = pydantic.Field(default=1, ge=1)

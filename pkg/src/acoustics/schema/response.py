"""Acoustics response schemas."""

import math
from typing import Self

import pydantic

from src.acoustics.domain import model
from src.acoustics.service import evaluation


class Bearing(pydantic.BaseModel):
    azimuth_deg: float
    elevation_deg: float | None = None
    delays_us: tuple[float, float]

    @classmethod
    def from_entity(cls, heading: model.AcousticHeading) -> Self:
        return cls(
            azimuth_deg=heading.azimuth_deg + 0.0,
            elevation_deg=None if heading.elevation is None else math.degrees(heading.elevation),
            delays_us=(heading.delays[0] * 1e6, heading.delays[1] * 1e6),
        )


class SynthesizedTraces(pydantic.BaseModel):
    paths: list[str]
    true_delays_us: tuple[float, float]


class EvaluationSummary(pydantic.BaseModel):
    evaluations: list[evaluation.HeadingEvaluation]

"""Vision response schemas."""

from typing import Self

import pydantic

from src.vision.domain import model

NOT_FOUND = "not found"


class DetectionReport(pydantic.BaseModel):
    """``cx cy blob_dim distance_m`` or ``not found``."""

    detection: model.Detection | None

    @classmethod
    def from_entity(cls, detection: model.Detection | None) -> Self:
        return cls(detection=detection)

    @property
    def found(self) -> bool:
        return self.detection is not None

    def render(self) -> str:
        return NOT_FOUND if self.detection is None else self.detection.report_line()


class EnhancedImage(pydantic.BaseModel):
    output_path: str
    width: int
    height: int
    channels: int

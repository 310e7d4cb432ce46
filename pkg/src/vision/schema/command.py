"""Vision command schemas."""

import pydantic

from src.vision.domain import model


class EnhanceImage(pydantic.BaseModel):
    """Command to run the blue filter over an image file."""

    input_path: str
    output_path: str
    discard_ratio: float = pydantic.Field(default=0.005, ge=0, lt=0.5)
    clip_limit: float = pydantic.Field(default=2.0, ge=1)
    tiles: tuple[int, int] = (8, 8)


class DetectObject(pydantic.BaseModel):
    """Command to detect the dominant blob in an image file.

    ``calibration`` holds (blob_dim, distance) pairs; with two or more the
    report carries a distance estimate.
    """

    input_path: str
    output_path: str | None = None
    enhance: bool = False
    config: model.DetectConfig = model.DetectConfig()
    calibration: tuple[tuple[float, float], ...] = ()

"""Telemetry response schemas."""

import pydantic


class PlotWritten(pydantic.BaseModel):
    path: str
    rows: int
    columns: tuple[str, ...]

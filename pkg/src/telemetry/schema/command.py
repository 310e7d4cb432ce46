"""Telemetry command schemas."""

import pydantic

from src.telemetry.domain import model

DEFAULT_PLOT_COLUMNS = ("z", "psi", "u")


class PlotTelemetry(pydantic.BaseModel):
    """Command to chart telemetry columns against time."""

    telemetry_path: str
    out_path: str
    columns: tuple[str, ...] = DEFAULT_PLOT_COLUMNS
    title: str | None = None

    @pydantic.field_validator("columns")
    @classmethod
    def _known_columns(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        unknown = [name for name in value if name not in model.COLUMNS or name in ("t", "event")]
        if unknown:
            raise ValueError(f"cannot plot columns: {', '.join(unknown)}")
        if not value:
            raise ValueError("choose at least one column to plot")
        return value

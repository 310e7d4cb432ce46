"""Per-tick telemetry record."""

from typing import Self

import pydantic

from src import exceptions
from src.common import types as common_types
from src.power.domain import model as power_model

NO_EVENT = "-"
EVENT_SEPARATOR = ";"

POSE_COLUMNS = ("x", "y", "z", "phi", "theta", "psi")
VELOCITY_COLUMNS = ("u", "v", "w", "p", "q", "r")
THRUST_COLUMNS = tuple(f"T{i}" for i in range(1, 9))
RAIL_COLUMNS = tuple(
    column for rail in power_model.Rail for column in (f"v_{rail}", f"i_{rail}")
)
COLUMNS: tuple[str, ...] = (
    "t",
    *POSE_COLUMNS,
    *VELOCITY_COLUMNS,
    *THRUST_COLUMNS,
    *RAIL_COLUMNS,
    "depth_reading",
    "event",
)


def _number(value: float) -> str:
    # +0.0 folds negative zero so identical states print identically
    return f"{round(value, 6) + 0.0:.6f}"


class TelemetryRow(pydantic.BaseModel):
    """One CSV line; rail voltages and currents follow ``power_model.Rail`` order."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    t: float = pydantic.Field(ge=0)
    pose: common_types.Vector6
    nu: common_types.Vector6
    thrusts: common_types.Vector8
    rail_voltages: common_types.Vector4
    rail_currents: common_types.Vector4
    depth_reading: float
    event: str = NO_EVENT

    @pydantic.field_validator("event")
    @classmethod
    def _single_cell(cls, value: str) -> str:
        if not value or "," in value or "\n" in value:
            raise ValueError("event must be a non-empty cell without commas or newlines")
        return value

    @classmethod
    def with_events(cls, events: list[str], **fields) -> Self:
        return cls(event=EVENT_SEPARATOR.join(events) if events else NO_EVENT, **fields)

    @property
    def events(self) -> list[str]:
        return [] if self.event == NO_EVENT else self.event.split(EVENT_SEPARATOR)

    def to_record(self) -> list[str]:
        rails = [
            value
            for voltage, current in zip(self.rail_voltages, self.rail_currents, strict=True)
            for value in (voltage, current)
        ]
        numbers = [self.t, *self.pose, *self.nu, *self.thrusts, *rails, self.depth_reading]
        return [_number(value) for value in numbers] + [self.event]

    @classmethod
    def from_record(cls, record: list[str]) -> Self:
        if len(record) != len(COLUMNS):
            raise exceptions.ValidationError(
                f"telemetry row has {len(record)} cells, expected {len(COLUMNS)}"
            )
        try:
            values = [float(cell) for cell in record[:-1]]
        except ValueError as exc:
            raise exceptions.ValidationError(f"telemetry row is not numeric: {exc}") from exc
        rails = values[21:29]
        return cls(
            t=values[0],
            pose=tuple(values[1:7]),
            nu=tuple(values[7:13]),
            thrusts=tuple(values[13:21]),
            rail_voltages=tuple(rails[0::2]),
            rail_currents=tuple(rails[1::2]),
            depth_reading=values[29],
            event=record[-1],
        )

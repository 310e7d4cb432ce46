"""Simulated world and run settings for one mission."""

from typing import Self

import pydantic

from src.acoustics.domain import model as acoustics_model
from src.control.domain import model as control_model
from src.core.domain import model as core_model
from src.power.domain import model as power_model
from src.sensors.domain import model as sensors_model
from src.vision.domain import camera


class WaterConfig(pydantic.BaseModel):
    """Optional image degradation and enhancement applied to rendered frames."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    degrade: bool = False
    enhance: bool = False
    beta: tuple[float, float, float] = (0.5, 0.12, 0.08)
    backlight: tuple[float, float, float] = (15.0, 80.0, 100.0)
    clip_limit: float = pydantic.Field(default=2.0, ge=1)


class Scenario(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    sim: core_model.SimConfig = core_model.SimConfig()
    params: core_model.VehicleParams = core_model.VehicleParams()
    initial: core_model.Pose = core_model.Pose()
    noise: sensors_model.NoiseConfig = sensors_model.NoiseConfig()
    gains: dict[control_model.Axis, control_model.PidGains] = pydantic.Field(
        default_factory=lambda: dict(control_model.DEFAULT_GAINS)
    )
    power: power_model.PowerConfig = power_model.PowerConfig()
    power_events: tuple[power_model.PowerEvent, ...] = ()
    targets: tuple[camera.VisualTarget, ...] = ()
    floor_depth: float = pydantic.Field(default=5.0, gt=0)
    water: WaterConfig = WaterConfig()
    ping: acoustics_model.PingConfig = acoustics_model.PingConfig()
    array_side: float = pydantic.Field(default=0.2, gt=0)

    @pydantic.model_validator(mode="after")
    def _unique_targets(self) -> Self:
        names = [target.name for target in self.targets]
        if len(names) != len(set(names)):
            raise ValueError("target names must be unique")
        return self

    def target(self, name: str) -> camera.VisualTarget | None:
        return next((target for target in self.targets if target.name == name), None)

    def with_sim(self, **updates) -> Self:
        """Copy with SimConfig fields overridden (CLI flags)."""
        values = {key: value for key, value in updates.items() if value is not None}
        sim = core_model.SimConfig(**{**self.sim.model_dump(), **values})
        return self.model_copy(update={"sim": sim})

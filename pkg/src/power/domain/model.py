"""Battery pods, distribution rails and kill switches."""

import enum
from typing import Self

import pydantic


class Rail(enum.StrEnum):
    """Distribution rails; the 19 V rail feeds the onboard computer."""

    V5 = "5v"
    V12 = "12v"
    V19 = "19v"
    UNREGULATED = "unreg"

    @property
    def nominal(self) -> float | None:
        """Regulated voltage, or None for the rail that follows the bus."""
        return {Rail.V5: 5.0, Rail.V12: 12.0, Rail.V19: 19.0}.get(self)

    @property
    def divider(self) -> float:
        return {Rail.V5: 1.0, Rail.V12: 0.4, Rail.V19: 0.25, Rail.UNREGULATED: 0.19}[self]

    @property
    def is_computer(self) -> bool:
        return self == Rail.V19


class Subsystem(enum.StrEnum):
    THRUSTERS = "thrusters"
    SOLENOIDS = "solenoids"
    SENSORS = "sensors"
    ACTUATION = "actuation"
    COMPUTER = "computer"

    @property
    def rail(self) -> Rail:
        return SUBSYSTEM_RAILS[self]


SUBSYSTEM_RAILS: dict[Subsystem, Rail] = {
    Subsystem.THRUSTERS: Rail.UNREGULATED,
    Subsystem.SOLENOIDS: Rail.V12,
    Subsystem.SENSORS: Rail.V5,
    Subsystem.ACTUATION: Rail.V5,
    Subsystem.COMPUTER: Rail.V19,
}


class BatteryPod(pydantic.BaseModel):
    """Hot-swappable 6S lithium-polymer pod with a linear voltage curve."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    present: bool = True
    soc: float = pydantic.Field(default=1.0, ge=0, le=1)
    capacity: float = pydantic.Field(default=10.0, gt=0)
    v_full: float = pydantic.Field(default=25.2, gt=0)
    v_empty: float = pydantic.Field(default=19.8, gt=0)

    @property
    def voltage(self) -> float:
        return self.v_empty + self.soc * (self.v_full - self.v_empty)

    @property
    def available(self) -> bool:
        return self.present and self.soc > 0.0

    def removed(self) -> Self:
        return self.model_copy(update={"present": False})

    def inserted(self) -> Self:
        return self.model_copy(update={"present": True})

    def discharged(self, amp_hours: float) -> Self:
        return self.model_copy(update={"soc": max(0.0, self.soc - amp_hours / self.capacity)})


class KillState(pydantic.BaseModel):
    """Hard kill cuts everything; soft kill keeps only the computer rail."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    hard_kill: bool = False
    soft_kill: bool = False

    def rail_allowed(self, rail: Rail) -> bool:
        if self.hard_kill:
            return False
        return not self.soft_kill or rail.is_computer


class RailReading(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    rail: Rail
    nominal: float
    voltage: float = pydantic.Field(ge=0)
    current: float = pydantic.Field(ge=0)
    powered: bool


class RailState(pydantic.BaseModel):
    """Snapshot of all four rails after a power step."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    bus_powered: bool
    bus_voltage: float
    rails: tuple[RailReading, ...]

    def __getitem__(self, rail: Rail) -> RailReading:
        for reading in self.rails:
            if reading.rail == rail:
                return reading
        raise KeyError(rail)

    def powered(self, rail: Rail) -> bool:
        return self[rail].powered


class PowerConfig(pydantic.BaseModel):
    """Idle loads per rail in amps at the rail voltage, and the thruster current model."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    idle_5v: float = pydantic.Field(default=1.0, ge=0)
    idle_12v: float = pydantic.Field(default=0.5, ge=0)
    idle_19v: float = pydantic.Field(default=2.5, ge=0)
    idle_unreg: float = pydantic.Field(default=0.0, ge=0)
    amps_per_newton: float = pydantic.Field(default=0.4, ge=0)
    hall_sensitivity: float = pydantic.Field(default=0.1, gt=0)
    current_sigma: float = pydantic.Field(default=0.0, ge=0)
    pods: int = pydantic.Field(default=2, ge=1)

    def idle_loads(self) -> dict[Rail, float]:
        return {
            Rail.V5: self.idle_5v,
            Rail.V12: self.idle_12v,
            Rail.V19: self.idle_19v,
            Rail.UNREGULATED: self.idle_unreg,
        }


class PowerEventKind(enum.StrEnum):
    HARD_KILL = "hard_kill"
    SOFT_KILL = "soft_kill"
    RELEASE = "release"
    REMOVE_POD = "remove_pod"
    INSERT_POD = "insert_pod"


class PowerEvent(pydantic.BaseModel):
    """Scheduled kill-switch or pod change."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    time: float = pydantic.Field(ge=0)
    kind: PowerEventKind
    pod: int | None = None

    @pydantic.model_validator(mode="after")
    def _pod_index(self) -> Self:
        needs_pod = self.kind in (PowerEventKind.REMOVE_POD, PowerEventKind.INSERT_POD)
        if needs_pod and self.pod is None:
            raise ValueError(f"{self.kind} needs a pod index")
        return self

    @property
    def label(self) -> str:
        return f"{self.kind}" if self.pod is None else f"{self.kind}:{self.pod}"

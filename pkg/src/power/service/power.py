"""Coulomb-counting pod model, rail distribution and monitoring ADC."""

import logging
from collections.abc import Mapping, Sequence

import numpy as np

from src import exceptions
from src.power.domain import model

logger = logging.getLogger(__name__)

ADC_MAX = 1023
ADC_REFERENCE = 5.0
HALL_OFFSET = 2.5
SECONDS_PER_HOUR = 3600.0


def step_power(
    pods: Sequence[model.BatteryPod],
    loads: Mapping[model.Rail, float],
    kill: model.KillState,
    dt: float,
) -> tuple[list[model.BatteryPod], model.RailState]:
    """Discharge the pods by one step and report every rail.

    Loads are bus currents per rail; an unpowered rail draws nothing. The
    total is split across available pods in proportion to their charge.
    """
    if dt <= 0:
        raise exceptions.ValidationError(f"dt must be positive, got {dt}")
    if any(load < 0 for load in loads.values()):
        raise exceptions.ValidationError("rail loads must be non-negative")

    available = [pod for pod in pods if pod.available]
    bus_powered = bool(available) and not kill.hard_kill
    bus_voltage = max((pod.voltage for pod in available), default=0.0) if bus_powered else 0.0

    readings = []
    total = 0.0
    for rail in model.Rail:
        powered = bus_powered and kill.rail_allowed(rail)
        current = float(loads.get(rail, 0.0)) if powered else 0.0
        nominal = rail.nominal if rail.nominal is not None else bus_voltage
        readings.append(
            model.RailReading(
                rail=rail,
                nominal=nominal,
                voltage=nominal if powered else 0.0,
                current=current,
                powered=powered,
            )
        )
        total += current

    next_pods = list(pods)
    charge = sum(pod.soc for pod in available)
    if bus_powered and total > 0.0 and charge > 0.0:
        amp_hours = total * dt / SECONDS_PER_HOUR
        next_pods = [
            pod.discharged(amp_hours * pod.soc / charge) if pod.available else pod for pod in pods
        ]
    return next_pods, model.RailState(
        bus_powered=bus_powered, bus_voltage=bus_voltage, rails=tuple(readings)
    )


def _to_code(volts: float) -> int:
    clamped = min(max(volts, 0.0), ADC_REFERENCE)
    return int(round(clamped / ADC_REFERENCE * ADC_MAX))


def monitor(
    reading: model.RailReading,
    generator: np.random.Generator | None = None,
    sensitivity: float = 0.1,
    current_sigma: float = 0.0,
) -> tuple[int, int]:
    """10-bit ADC counts for the divided rail voltage and the Hall current sensor."""
    v_code = _to_code(reading.voltage * reading.rail.divider)
    current = reading.current
    if generator is not None and current_sigma > 0.0:
        current += float(generator.normal(0.0, current_sigma))
    i_code = _to_code(current * sensitivity + HALL_OFFSET)
    return v_code, i_code


def thruster_current(thrusts: np.ndarray, amps_per_newton: float) -> float:
    return float(np.sum(np.abs(thrusts)) * amps_per_newton)


class PowerSystem:
    """Pods, kill switches and the scheduled power events of one run."""

    def __init__(
        self,
        cfg: model.PowerConfig,
        events: Sequence[model.PowerEvent] = (),
        generator: np.random.Generator | None = None,
    ) -> None:
        self._cfg = cfg
        self._pods = [model.BatteryPod() for _ in range(cfg.pods)]
        self._kill = model.KillState()
        self._events = sorted(events, key=lambda event: event.time)
        self._next_event = 0
        self._generator = generator
        self._state: model.RailState | None = None
        for event in self._events:
            if event.pod is not None and not 0 <= event.pod < cfg.pods:
                raise exceptions.ValidationError(f"power event names unknown pod {event.pod}")

    @property
    def pods(self) -> list[model.BatteryPod]:
        return list(self._pods)

    @property
    def kill(self) -> model.KillState:
        return self._kill

    @property
    def state(self) -> model.RailState | None:
        return self._state

    def apply_events(self, t: float) -> list[str]:
        """Fire every scheduled event due at or before ``t``; returns their labels."""
        fired = []
        while self._next_event < len(self._events) and self._events[self._next_event].time <= t:
            event = self._events[self._next_event]
            self._next_event += 1
            match event.kind:
                case model.PowerEventKind.HARD_KILL:
                    self._kill = self._kill.model_copy(update={"hard_kill": True})
                case model.PowerEventKind.SOFT_KILL:
                    self._kill = self._kill.model_copy(update={"soft_kill": True})
                case model.PowerEventKind.RELEASE:
                    self._kill = model.KillState()
                case model.PowerEventKind.REMOVE_POD:
                    self._pods[event.pod] = self._pods[event.pod].removed()  # type: ignore[index]
                case model.PowerEventKind.INSERT_POD:
                    self._pods[event.pod] = self._pods[event.pod].inserted()  # type: ignore[index]
            logger.info("Power event at t=%.2f s: %s", t, event.label)
            fired.append(event.label)
        return fired

    def step(self, thrusts: np.ndarray, dt: float, extra: Mapping[model.Rail, float] | None = None) -> model.RailState:
        loads = dict(self._cfg.idle_loads())
        loads[model.Rail.UNREGULATED] += thruster_current(thrusts, self._cfg.amps_per_newton)
        for rail, amps in (extra or {}).items():
            loads[rail] = loads.get(rail, 0.0) + amps
        self._pods, self._state = step_power(self._pods, loads, self._kill, dt)
        return self._state

    def monitor_all(self) -> dict[model.Rail, tuple[int, int]]:
        if self._state is None:
            return {}
        return {
            reading.rail: monitor(
                reading, self._generator, self._cfg.hall_sensitivity, self._cfg.current_sigma
            )
            for reading in self._state.rails
        }

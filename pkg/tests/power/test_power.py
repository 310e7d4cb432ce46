"""Tests for pods, rails and kill switches."""

import numpy as np
import pytest

from src import exceptions
from src.power.domain import model
from src.power.service import power

LOADS = {model.Rail.V5: 1.0, model.Rail.V12: 0.5, model.Rail.V19: 2.5, model.Rail.UNREGULATED: 8.0}


class TestStepPower:
    """Tests for step_power."""

    def test_all_rails_powered_by_default(self) -> None:
        # Arrange
        pods = [model.BatteryPod(), model.BatteryPod()]

        # Act
        _, state = power.step_power(pods, LOADS, model.KillState(), 0.01)

        # Assert
        assert state.bus_powered
        assert all(reading.powered for reading in state.rails)
        assert state[model.Rail.UNREGULATED].voltage == pytest.approx(25.2)

    def test_hard_kill_cuts_every_rail_including_computer(self) -> None:
        pods = [model.BatteryPod(), model.BatteryPod()]

        _, state = power.step_power(pods, LOADS, model.KillState(hard_kill=True), 0.01)

        assert not state.bus_powered
        assert not any(reading.powered for reading in state.rails)
        assert not state.powered(model.Rail.V19)

    def test_soft_kill_keeps_only_computer(self) -> None:
        pods = [model.BatteryPod(), model.BatteryPod()]

        _, state = power.step_power(pods, LOADS, model.KillState(soft_kill=True), 0.01)

        assert state.powered(model.Rail.V19)
        assert [rail for rail in model.Rail if state.powered(rail)] == [model.Rail.V19]
        assert state[model.Rail.UNREGULATED].current == 0.0

    def test_removing_one_pod_keeps_bus_up(self) -> None:
        pods = [model.BatteryPod().removed(), model.BatteryPod()]

        next_pods, state = power.step_power(pods, LOADS, model.KillState(), 1.0)

        assert state.bus_powered
        assert next_pods[0].soc == 1.0
        assert next_pods[1].soc < 1.0

    def test_no_pods_no_bus(self) -> None:
        pods = [model.BatteryPod().removed(), model.BatteryPod(soc=0.0)]

        _, state = power.step_power(pods, LOADS, model.KillState(), 0.01)

        assert not state.bus_powered

    def test_discharge_split_by_charge(self) -> None:
        # Arrange
        pods = [model.BatteryPod(soc=0.8), model.BatteryPod(soc=0.4)]
        loads = {model.Rail.UNREGULATED: 36.0}

        # Act
        next_pods, _ = power.step_power(pods, loads, model.KillState(), 100.0)

        # Assert
        # 36 A for 100 s is 1 Ah, two thirds from the fuller pod
        assert next_pods[0].soc == pytest.approx(0.8 - (2.0 / 3.0) / 10.0)
        assert next_pods[1].soc == pytest.approx(0.4 - (1.0 / 3.0) / 10.0)

    def test_invalid_inputs(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            power.step_power([model.BatteryPod()], LOADS, model.KillState(), 0.0)
        with pytest.raises(exceptions.ValidationError):
            power.step_power([model.BatteryPod()], {model.Rail.V5: -1.0}, model.KillState(), 0.01)


class TestMonitor:
    """Tests for the monitoring ADC."""

    def test_19v_rail_code(self) -> None:
        reading = model.RailReading(rail=model.Rail.V19, nominal=19.0, voltage=19.0, current=0.0, powered=True)

        v_code, i_code = power.monitor(reading)

        assert v_code == 972
        assert i_code == 512

    def test_codes_clamp_to_ten_bits(self) -> None:
        reading = model.RailReading(
            rail=model.Rail.V5, nominal=5.0, voltage=5.0, current=100.0, powered=True
        )

        v_code, i_code = power.monitor(reading)

        assert v_code == 1023
        assert i_code == 1023

    def test_current_noise_is_seeded(self) -> None:
        reading = model.RailReading(rail=model.Rail.V12, nominal=12.0, voltage=12.0, current=2.0, powered=True)

        first = power.monitor(reading, np.random.default_rng(1), current_sigma=0.5)
        second = power.monitor(reading, np.random.default_rng(1), current_sigma=0.5)

        assert first == second


class TestPowerSystem:
    """Tests for PowerSystem."""

    def test_events_fire_in_time_order(self) -> None:
        # Arrange
        system = power.PowerSystem(
            model.PowerConfig(),
            events=[
                model.PowerEvent(time=2.0, kind=model.PowerEventKind.RELEASE),
                model.PowerEvent(time=1.0, kind=model.PowerEventKind.SOFT_KILL),
            ],
        )

        # Act
        early = system.apply_events(0.5)
        first = system.apply_events(1.0)
        killed = system.kill
        second = system.apply_events(5.0)

        # Assert
        assert early == []
        assert first == ["soft_kill"]
        assert killed.soft_kill
        assert second == ["release"]
        assert system.kill == model.KillState()

    def test_pod_swap_never_drops_bus(self) -> None:
        system = power.PowerSystem(
            model.PowerConfig(),
            events=[
                model.PowerEvent(time=0.1, kind=model.PowerEventKind.REMOVE_POD, pod=0),
                model.PowerEvent(time=0.2, kind=model.PowerEventKind.INSERT_POD, pod=0),
            ],
        )

        powered = []
        for k in range(30):
            system.apply_events(k * 0.01)
            powered.append(system.step(np.zeros(8), 0.01).bus_powered)

        assert all(powered)
        assert system.pods[0].present

    def test_thrust_draws_on_unregulated_rail(self) -> None:
        system = power.PowerSystem(model.PowerConfig(amps_per_newton=0.5))

        state = system.step(np.array([2.0, -2.0, 0, 0, 0, 0, 0, 0]), 0.01)

        assert state[model.Rail.UNREGULATED].current == pytest.approx(2.0)

    def test_unknown_pod_rejected(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            power.PowerSystem(
                model.PowerConfig(pods=2),
                events=[model.PowerEvent(time=0.0, kind=model.PowerEventKind.REMOVE_POD, pod=5)],
            )

    def test_pod_event_needs_index(self) -> None:
        with pytest.raises(ValueError):
            model.PowerEvent(time=0.0, kind=model.PowerEventKind.REMOVE_POD)

    def test_monitor_all_empty_before_first_step(self) -> None:
        system = power.PowerSystem(model.PowerConfig())

        assert system.monitor_all() == {}
        system.step(np.zeros(8), 0.01)
        assert set(system.monitor_all()) == set(model.Rail)

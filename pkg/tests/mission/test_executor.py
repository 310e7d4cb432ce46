"""Tests for closed-loop mission execution."""

import pytest

from src import exceptions
from src.core.domain import model as core_model
from src.mission.domain import model
from src.mission.domain.scenario import Scenario
from src.mission.domain.status import TaskKind, TaskPhase
from src.mission.service import executor
from src.power.domain import model as power_model
from src.telemetry.adapter import csv_file
from src.vision.domain import camera


class TestRunMission:
    """Tests for run_mission."""

    def test_same_seed_same_telemetry(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        # Act
        first_report, first_rows = executor.run_mission(buoy_plan, short_scenario)
        second_report, second_rows = executor.run_mission(buoy_plan, short_scenario)

        # Assert
        assert csv_file.render_csv(first_rows) == csv_file.render_csv(second_rows)
        assert first_report.render() == second_report.render()

    def test_different_seed_changes_noise(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        _, first_rows = executor.run_mission(buoy_plan, short_scenario)
        _, second_rows = executor.run_mission(buoy_plan, short_scenario.with_sim(seed=6))

        assert csv_file.render_csv(first_rows) != csv_file.render_csv(second_rows)

    def test_time_exhausted_fails_open_task(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        report, rows = executor.run_mission(buoy_plan, short_scenario)

        assert len(report.outcomes) == 1
        assert report.outcomes[0].phase == TaskPhase.FAILED
        assert report.outcomes[0].note.startswith("mission time exhausted")
        assert report.end_time == pytest.approx(1.0)
        assert len(rows) == 100
        assert rows[0].t == pytest.approx(0.01)
        assert not report.hard_killed

    def test_telemetry_decimation(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        _, rows = executor.run_mission(buoy_plan, short_scenario, telemetry_decimation=10)

        # off-cadence rows appear only to carry events
        assert 10 <= len(rows) < 100
        assert all(row.events for row in rows if round(row.t * 100) % 10 != 0)

    def test_hard_kill_ends_mission(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        # Arrange
        scenario = short_scenario.model_copy(
            update={"power_events": (power_model.PowerEvent(time=0.5, kind=power_model.PowerEventKind.HARD_KILL),)}
        )

        # Act
        report, rows = executor.run_mission(buoy_plan, scenario)

        # Assert
        assert report.hard_killed
        assert report.end_time < 0.6
        assert rows[-1].events == ["hard_kill"]
        assert rows[-1].thrusts == (0.0,) * 8
        assert rows[-1].rail_voltages == (0.0,) * 4
        assert report.outcomes[0].note.startswith("hard kill")

    def test_soft_kill_stops_thrusters(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        scenario = short_scenario.model_copy(
            update={"power_events": (power_model.PowerEvent(time=0.2, kind=power_model.PowerEventKind.SOFT_KILL),)}
        )

        report, rows = executor.run_mission(buoy_plan, scenario)

        after = [row for row in rows if row.t > 0.205]
        assert after
        assert all(row.thrusts == (0.0,) * 8 for row in after)
        assert all(row.rail_voltages[2] == 19.0 for row in after)
        assert not report.hard_killed

    def test_unknown_target(self, short_scenario: Scenario) -> None:
        plan = model.MissionPlan(tasks=(model.Task(name="gate1", kind=TaskKind.GATE, target="gate"),))

        with pytest.raises(exceptions.ScenarioReferenceError):
            executor.run_mission(plan, short_scenario)

    def test_target_kind_must_suit_task(self, short_scenario: Scenario) -> None:
        plan = model.MissionPlan(tasks=(model.Task(name="gate1", kind=TaskKind.GATE, target="red"),))

        with pytest.raises(exceptions.ValidationError):
            executor.run_mission(plan, short_scenario)

    def test_task_without_target(self, short_scenario: Scenario) -> None:
        plan = model.MissionPlan(tasks=(model.Task(name="buoy1", kind=TaskKind.BUOY),))

        with pytest.raises(exceptions.ValidationError):
            executor.run_mission(plan, short_scenario)

    def test_decimation_must_be_positive(self, buoy_plan: model.MissionPlan, short_scenario: Scenario) -> None:
        with pytest.raises(exceptions.ValidationError):
            executor.run_mission(buoy_plan, short_scenario, vision_decimation=0)


class TestTransitsInLoop:
    """Transit motions run before the task handler."""

    def test_heave_transit_reaches_depth(self, short_scenario: Scenario) -> None:
        # Arrange
        plan = model.MissionPlan(
            tasks=(
                model.Task(
                    name="buoy1",
                    kind=TaskKind.BUOY,
                    target="red",
                    transit=(model.Transit(motion="heave", setpoint=1.05, timeout=8.0),),
                ),
            )
        )

        # Act
        report, _ = executor.run_mission(plan, short_scenario)

        # Assert
        transits = report.outcomes[0].transits
        assert len(transits) == 1
        assert transits[0].motion == "heave"
        assert transits[0].status == "reached"


class TestBlindMarkerDrop:
    """A marker drop with vision off drives over the mapped bin and releases one marker."""

    def test_marker_released_over_bin(self) -> None:
        # Arrange
        bin_target = camera.VisualTarget(name="bin", kind=camera.TargetKind.BIN, position=(0.0, 0.0, 3.0), size=0.6)
        scenario = Scenario(
            sim=core_model.SimConfig(dt=0.01, duration=15.0, seed=1),
            initial=core_model.Pose(z=1.0),
            targets=(bin_target,),
            floor_depth=3.0,
        )
        plan = model.MissionPlan(
            tasks=(model.Task(name="drop1", kind=TaskKind.MARKER_DROP, target="bin", vision=False, timeout=10.0),)
        )

        # Act
        report, rows = executor.run_mission(plan, scenario)

        # Assert
        assert report.outcomes[0].phase == TaskPhase.DONE
        assert report.markers_dropped == 1
        assert any("marker_drop" in row.events for row in rows)

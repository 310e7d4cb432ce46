"""Tests for mission domain models."""

import pytest

from src import exceptions
from src.dynamics.domain import model as dynamics_model
from src.mission.domain import model
from src.mission.domain.status import TaskKind, TaskPhase, TransitMotion, TransitStatus


class TestTaskPhase:
    """Tests for TaskPhase transitions."""

    @pytest.mark.parametrize(
        ("source", "target", "allowed"),
        [
            (TaskPhase.SEARCH, TaskPhase.ALIGN, True),
            (TaskPhase.SEARCH, TaskPhase.ACT, True),
            (TaskPhase.ALIGN, TaskPhase.SEARCH, True),
            (TaskPhase.ACT, TaskPhase.ALIGN, False),
            (TaskPhase.ACT, TaskPhase.FAILED, True),
            (TaskPhase.DONE, TaskPhase.FAILED, False),
            (TaskPhase.FAILED, TaskPhase.SEARCH, False),
        ],
    )
    def test_transitions(self, source: TaskPhase, target: TaskPhase, allowed: bool) -> None:
        assert source.can_transition_to(target) is allowed


class TestTaskState:
    """Tests for TaskState."""

    def test_moving_resets_phase_clock_and_stage(self) -> None:
        # Arrange
        state = model.TaskState(phase_elapsed=3.0, stage=2, elapsed=5.0)

        # Act
        moved = state.mark_align(estimate=(1.0, 2.0, 3.0))

        # Assert
        assert moved.phase == TaskPhase.ALIGN
        assert moved.phase_elapsed == 0.0
        assert moved.stage == 0
        assert moved.elapsed == 5.0
        assert moved.estimate == (1.0, 2.0, 3.0)

    def test_terminal_state_cannot_move(self) -> None:
        done = model.TaskState().mark_done("ok")

        with pytest.raises(exceptions.InvalidStateError):
            done.mark_failed("late")

    def test_act_cannot_return_to_search(self) -> None:
        state = model.TaskState(phase=TaskPhase.ACT)

        with pytest.raises(exceptions.InvalidStateError):
            state.mark_search()


class TestMissionPlan:
    def test_needs_a_task(self) -> None:
        with pytest.raises(ValueError):
            model.MissionPlan(tasks=())

    def test_transit_motion_maps_to_axis(self) -> None:
        assert TransitMotion.HEAVE.axis.value == "heave"


class TestMissionReport:
    """Tests for MissionReport.render."""

    def test_render_lists_tasks_and_totals(self) -> None:
        # Arrange
        report = model.MissionReport(
            seed=7,
            outcomes=(
                model.TaskOutcome(
                    name="gate1",
                    kind=TaskKind.GATE,
                    target="gate",
                    phase=TaskPhase.DONE,
                    started=0.0,
                    finished=12.5,
                    transits=(
                        model.TransitOutcome(motion=TransitMotion.HEAVE, status=TransitStatus.REACHED, duration=4.0),
                    ),
                    note="passed gate",
                ),
                model.TaskOutcome(
                    name="pinger4",
                    kind=TaskKind.PINGER,
                    target="pinger",
                    phase=TaskPhase.FAILED,
                    started=12.5,
                    finished=20.0,
                    note="hard kill in SEARCH",
                ),
            ),
            final_state=dynamics_model.VehicleState(t=20.0),
            end_time=20.0,
            hard_killed=True,
            markers_dropped=1,
            payload_events=("t=9.00 marker landed at 1.000 2.000 in bin",),
        )

        # Act
        lines = report.render().splitlines()

        # Assert
        assert lines[0] == "seed 7"
        assert lines[1] == "end_time 20.00"
        assert lines[2] == "tasks 1/2 done"
        assert lines[3] == "task 1 gate1 gate gate DONE 0.00-12.50 (passed gate)"
        assert lines[4] == "  transit heave reached 4.00"
        assert lines[5] == "task 2 pinger4 pinger pinger FAILED 12.50-20.00 (hard kill in SEARCH)"
        assert lines[6] == "final_pose 0.0000 0.0000 0.0000 0.0000 0.0000 0.0000"
        assert lines[7] == "markers_dropped 1"
        assert lines[8] == "hard_kill yes"
        assert lines[9].startswith("event t=9.00 marker landed")
        assert report.completed == 1

    def test_outcome_must_be_terminal(self) -> None:
        with pytest.raises(ValueError):
            model.TaskOutcome(
                name="gate1", kind=TaskKind.GATE, target="gate", phase=TaskPhase.ACT, started=0.0, finished=1.0
            )

    def test_marker_count_capped(self) -> None:
        with pytest.raises(ValueError):
            model.MissionReport(
                seed=0, outcomes=(), final_state=dynamics_model.VehicleState(), end_time=0.0, markers_dropped=3
            )

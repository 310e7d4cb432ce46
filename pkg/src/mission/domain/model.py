"""Mission plans, task state and reports."""

import enum
import math
from typing import Self

import pydantic

from src import exceptions
from src.common import types as common_types
from src.control.domain import model as control_model
from src.dynamics.domain import model as dynamics_model
from src.mission.domain.status import TaskKind, TaskPhase, TransitMotion, TransitStatus
from src.payloads.domain import model as payloads_model

DEFAULT_TIMEOUT = 120.0
DEFAULT_TRANSIT_TIMEOUT = 30.0
ALL_AXES: frozenset[control_model.Axis] = frozenset(control_model.Axis)


class Transit(pydantic.BaseModel):
    """Single master-layer motion before a task.

    Surge and sway setpoints are distances relative to the pose when the
    transit starts; heave is an absolute depth and yaw an absolute heading.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    motion: TransitMotion
    setpoint: float
    timeout: float = pydantic.Field(default=DEFAULT_TRANSIT_TIMEOUT, gt=0)
    enabled: bool = True


class Task(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    name: str
    kind: TaskKind
    target: str | None = None
    timeout: float = pydantic.Field(default=DEFAULT_TIMEOUT, gt=0)
    transit: tuple[Transit, ...] = ()
    switches: frozenset[control_model.Axis] = ALL_AXES
    vision: bool = True


class MissionPlan(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    tasks: tuple[Task, ...]

    @pydantic.field_validator("tasks")
    @classmethod
    def _non_empty(cls, value: tuple[Task, ...]) -> tuple[Task, ...]:
        if not value:
            raise ValueError("a mission plan needs at least one task")
        return value


class TaskState(pydantic.BaseModel):
    """Progress of one task handler.

    ``anchor`` is the (x, y, z, psi) hold point of the current phase,
    ``estimate`` the latest world estimate of the target and ``act_goal``
    the world point the ACT phase drives to.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    phase: TaskPhase = TaskPhase.SEARCH
    elapsed: float = pydantic.Field(default=0.0, ge=0)
    phase_elapsed: float = pydantic.Field(default=0.0, ge=0)
    anchor: tuple[float, float, float, float] | None = None
    estimate: common_types.Vector3 | None = None
    act_goal: common_types.Vector3 | None = None
    act_heading: float | None = None
    stage: int = pydantic.Field(default=0, ge=0)
    last_seen: float | None = None
    note: str = ""

    def advanced(self, dt: float) -> Self:
        return self.model_copy(
            update={"elapsed": self.elapsed + dt, "phase_elapsed": self.phase_elapsed + dt}
        )

    def _moved(self, phase: TaskPhase, **updates) -> Self:
        if not self.phase.can_transition_to(phase):
            raise exceptions.InvalidStateError(f"Cannot move task from {self.phase} to {phase}")
        return self.model_copy(update={"phase": phase, "phase_elapsed": 0.0, "stage": 0, **updates})

    def mark_search(self) -> Self:
        """Fall back to searching after the target was lost."""
        return self._moved(TaskPhase.SEARCH, anchor=None)

    def mark_align(self, estimate: tuple[float, float, float] | None = None) -> Self:
        return self._moved(TaskPhase.ALIGN, estimate=estimate)

    def mark_act(self, act_goal: tuple[float, float, float] | None, act_heading: float | None) -> Self:
        return self._moved(TaskPhase.ACT, act_goal=act_goal, act_heading=act_heading)

    def mark_done(self, note: str = "") -> Self:
        return self._moved(TaskPhase.DONE, note=note)

    def mark_failed(self, note: str) -> Self:
        return self._moved(TaskPhase.FAILED, note=note)

    def with_stage(self, stage: int) -> Self:
        return self.model_copy(update={"stage": stage})


class PayloadKind(enum.StrEnum):
    DROP = "drop"
    LAUNCH = "launch"
    GRABBER = "grabber"


class PayloadRequest(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kind: PayloadKind
    grabber: payloads_model.GrabberCommand | None = None


class TaskAction(pydantic.BaseModel):
    """What a task handler asks of the motion library and the payloads this tick."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    goal: control_model.MotionGoal | None = None
    payload: PayloadRequest | None = None


class TransitOutcome(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    motion: TransitMotion
    status: TransitStatus
    duration: float


class TaskOutcome(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    name: str
    kind: TaskKind
    target: str | None
    phase: TaskPhase
    started: float
    finished: float
    transits: tuple[TransitOutcome, ...] = ()
    note: str = ""

    @pydantic.field_validator("phase")
    @classmethod
    def _terminal(cls, value: TaskPhase) -> TaskPhase:
        if not value.is_terminal:
            raise ValueError("task outcomes are DONE or FAILED")
        return value

    @property
    def duration(self) -> float:
        return self.finished - self.started


class MissionReport(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    seed: int
    outcomes: tuple[TaskOutcome, ...]
    final_state: dynamics_model.VehicleState
    end_time: float
    hard_killed: bool = False
    markers_dropped: int = pydantic.Field(default=0, ge=0, le=payloads_model.MARKER_CAPACITY)
    payload_events: tuple[str, ...] = ()

    @property
    def completed(self) -> int:
        return sum(1 for outcome in self.outcomes if outcome.phase == TaskPhase.DONE)

    def render(self) -> str:
        lines = [
            f"seed {self.seed}",
            f"end_time {self.end_time:.2f}",
            f"tasks {self.completed}/{len(self.outcomes)} done",
        ]
        for index, outcome in enumerate(self.outcomes, start=1):
            target = outcome.target or "-"
            note = f" ({outcome.note})" if outcome.note else ""
            lines.append(
                f"task {index} {outcome.name} {outcome.kind} {target} {outcome.phase} "
                f"{outcome.started:.2f}-{outcome.finished:.2f}{note}"
            )
            for transit in outcome.transits:
                lines.append(f"  transit {transit.motion} {transit.status} {transit.duration:.2f}")
        pose = self.final_state.pose
        lines.append(
            "final_pose "
            + " ".join(
                f"{round(value, 4) + 0.0:.4f}"
                for value in (pose.x, pose.y, pose.z, pose.phi, pose.theta, pose.psi)
            )
        )
        lines.append(f"markers_dropped {self.markers_dropped}")
        lines.append(f"hard_kill {'yes' if self.hard_killed else 'no'}")
        lines.extend(f"event {event}" for event in self.payload_events)
        return "\n".join(lines) + "\n"


def heading_to(origin: tuple[float, float], point: tuple[float, float]) -> float:
    return math.atan2(point[1] - origin[1], point[0] - origin[0])

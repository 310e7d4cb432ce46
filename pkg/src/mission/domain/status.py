"""Mission status enums."""

import enum

from src.control.domain import model as control_model
from src.vision.domain import camera


class TaskPhase(enum.StrEnum):
    """Per-task state machine phases."""

    SEARCH = "SEARCH"
    ALIGN = "ALIGN"
    ACT = "ACT"
    DONE = "DONE"
    FAILED = "FAILED"

    @property
    def is_terminal(self) -> bool:
        return self in (TaskPhase.DONE, TaskPhase.FAILED)

    @property
    def rank(self) -> int:
        return list(TaskPhase).index(self)

    def can_transition_to(self, target: "TaskPhase") -> bool:
        """Phases only move forward, except ALIGN may fall back to SEARCH."""
        if self.is_terminal:
            return False
        if target == TaskPhase.FAILED:
            return True
        if self == TaskPhase.ALIGN and target == TaskPhase.SEARCH:
            return True
        return target.rank > self.rank


class TaskKind(enum.StrEnum):
    GATE = "gate"
    BUOY = "buoy"
    MARKER_DROP = "marker_drop"
    TORPEDO = "torpedo"
    PINGER = "pinger"
    GRAB = "grab"

    @property
    def target_kinds(self) -> frozenset[camera.TargetKind]:
        """World objects this task can be pointed at."""
        match self:
            case TaskKind.GATE:
                return frozenset({camera.TargetKind.GATE})
            case TaskKind.BUOY:
                return frozenset({camera.TargetKind.BUOY})
            case TaskKind.MARKER_DROP:
                return frozenset({camera.TargetKind.BIN})
            case TaskKind.TORPEDO:
                return frozenset({camera.TargetKind.BUOY, camera.TargetKind.OBJECT})
            case TaskKind.PINGER:
                return frozenset({camera.TargetKind.PINGER})
            case _:
                return frozenset({camera.TargetKind.OBJECT})

    @property
    def uses_vision(self) -> bool:
        return self != TaskKind.PINGER


class TransitMotion(enum.StrEnum):
    """Motions the master layer can chain between tasks."""

    SURGE = "surge"
    SWAY = "sway"
    HEAVE = "heave"
    YAW = "yaw"

    @property
    def axis(self) -> control_model.Axis:
        return control_model.Axis(self.value)


class TransitStatus(enum.StrEnum):
    REACHED = "reached"
    TIMEOUT = "timeout"

"""Mission response schemas."""

from typing import Self

import pydantic

from src.mission.domain import model


class TaskResult(pydantic.BaseModel):
    name: str
    kind: str
    phase: str
    duration: float
    note: str = ""

    @classmethod
    def from_entity(cls, outcome: model.TaskOutcome) -> Self:
        return cls(
            name=outcome.name,
            kind=str(outcome.kind),
            phase=str(outcome.phase),
            duration=outcome.duration,
            note=outcome.note,
        )


class MissionSummary(pydantic.BaseModel):
    scenario: str
    seed: int
    end_time: float
    hard_killed: bool
    tasks: list[TaskResult]
    telemetry_path: str
    report_path: str

    @property
    def completed(self) -> int:
        return sum(1 for task in self.tasks if task.phase == "DONE")


class MissionRunList(pydantic.BaseModel):
    runs: list[MissionSummary]

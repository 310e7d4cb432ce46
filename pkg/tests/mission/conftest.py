"""Shared mission fixtures."""

import pytest

from src.core.domain import model as core_model
from src.mission.domain import model
from src.mission.domain.scenario import Scenario
from src.mission.domain.status import TaskKind
from src.sensors.domain import model as sensors_model
from src.vision.domain import camera


@pytest.fixture
def buoy() -> camera.VisualTarget:
    return camera.VisualTarget(name="red", kind=camera.TargetKind.BUOY, position=(8.0, 0.0, 1.0), size=0.4)


@pytest.fixture
def short_scenario(buoy: camera.VisualTarget) -> Scenario:
    return Scenario(
        sim=core_model.SimConfig(dt=0.01, duration=1.0, seed=5),
        initial=core_model.Pose(z=1.0),
        noise=sensors_model.NoiseConfig(),
        targets=(buoy,),
    )


@pytest.fixture
def buoy_plan() -> model.MissionPlan:
    return model.MissionPlan(tasks=(model.Task(name="buoy1", kind=TaskKind.BUOY, target="red"),))

"""Application dependency injection container."""

from dependency_injector import containers, providers

from src.acoustics.dependency import AcousticsContainer
from src.allocation.dependency import AllocationContainer
from src.core.dependency import CoreContainer
from src.mission.dependency import MissionContainer
from src.telemetry.dependency import TelemetryContainer
from src.vision.dependency import VisionContainer


class ApplicationContainer(containers.DeclarativeContainer):
    """Root application container."""

    config = providers.Configuration()

    # Domain containers
    core = providers.Container(CoreContainer)

    allocation = providers.Container(
        AllocationContainer,
        core_adapter=core.adapter,
    )

    acoustics = providers.Container(AcousticsContainer)

    vision = providers.Container(VisionContainer)

    mission = providers.Container(
        MissionContainer,
        config=config,
    )

    telemetry = providers.Container(TelemetryContainer)

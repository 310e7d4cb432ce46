"""Mission dependency injection container."""

from dependency_injector import containers, providers

from src.mission.adapter import plan_file, scenario_file
from src.mission.handler import handlers


class MissionAdapterContainer(containers.DeclarativeContainer):
    """Container for scenario and plan file readers."""

    scenario_reader = providers.Singleton(scenario_file.ScenarioFileReader)
    plan_reader = providers.Singleton(plan_file.PlanFileReader)


class MissionHandlerContainer(containers.DeclarativeContainer):
    """Container for mission handlers."""

    config = providers.Configuration()
    adapter = providers.DependenciesContainer()

    run_mission_handler = providers.Factory(
        handlers.RunMissionHandler,
        scenario_reader=adapter.scenario_reader,
        plan_reader=adapter.plan_reader,
        vision_decimation=config.vision_decimation,
        acoustics_decimation=config.acoustics_decimation,
        camera_width=config.camera_width,
        camera_height=config.camera_height,
        telemetry_filename=config.telemetry_filename,
        report_filename=config.report_filename,
        max_jobs=config.max_jobs,
    )


class MissionContainer(containers.DeclarativeContainer):
    """Root mission container."""

    config = providers.Configuration()

    adapter = providers.Container(MissionAdapterContainer)

    handler = providers.Container(
        MissionHandlerContainer,
        config=config,
        adapter=adapter,
    )

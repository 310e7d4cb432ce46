"""Mission command handlers."""

import asyncio
import concurrent.futures
import functools
import logging
import pathlib

from src.mission.adapter import plan_file, scenario_file
from src.mission.domain import model
from src.mission.schema import command, response
from src.mission.service import executor
from src.telemetry.adapter import csv_file

logger = logging.getLogger(__name__)


def run_scenario(
    scenario_reader: scenario_file.ScenarioFileReader,
    scenario_path: str,
    plan: model.MissionPlan,
    out_dir: pathlib.Path,
    sim_overrides: dict[str, float | int],
    options: dict[str, int],
    telemetry_filename: str,
    report_filename: str,
) -> response.MissionSummary:
    """Load, run and write one scenario; runs inside worker processes too."""
    scenario = scenario_reader.load(scenario_path)
    if sim_overrides:
        scenario = scenario.with_sim(**sim_overrides)
    report, rows = executor.run_mission(plan, scenario, **options)

    out_dir.mkdir(parents=True, exist_ok=True)
    telemetry_path = csv_file.write_telemetry(out_dir / telemetry_filename, rows)
    report_path = out_dir / report_filename
    report_path.write_text(report.render(), encoding="utf-8")
    logger.info(
        "Scenario %s: %d/%d tasks done at t=%.2f s",
        scenario_path,
        report.completed,
        len(report.outcomes),
        report.end_time,
    )
    return response.MissionSummary(
        scenario=scenario_path,
        seed=report.seed,
        end_time=report.end_time,
        hard_killed=report.hard_killed,
        tasks=[response.TaskResult.from_entity(outcome) for outcome in report.outcomes],
        telemetry_path=str(telemetry_path),
        report_path=str(report_path),
    )


class RunMissionHandler:
    """Handle ``sim run``; independent scenarios fan out to worker processes."""

    def __init__(
        self,
        scenario_reader: scenario_file.ScenarioFileReader,
        plan_reader: plan_file.PlanFileReader,
        vision_decimation: int = 10,
        acoustics_decimation: int = 100,
        camera_width: int = 160,
        camera_height: int = 120,
        telemetry_filename: str = "telemetry.csv",
        report_filename: str = "report.txt",
        max_jobs: int = 4,
    ) -> None:
        self._scenario_reader = scenario_reader
        self._plan_reader = plan_reader
        self._options = {
            "vision_decimation": vision_decimation,
            "acoustics_decimation": acoustics_decimation,
            "camera_width": camera_width,
            "camera_height": camera_height,
        }
        self._telemetry_filename = telemetry_filename
        self._report_filename = report_filename
        self._max_jobs = max_jobs

    def _out_dirs(self, cmd: command.RunMission) -> list[pathlib.Path]:
        root = pathlib.Path(cmd.out_dir)
        if len(cmd.scenarios) == 1:
            return [root]
        return [root / pathlib.Path(path).stem for path in cmd.scenarios]

    async def handle(self, cmd: command.RunMission) -> response.MissionRunList:
        plan = self._plan_reader.load(cmd.plan)
        overrides = {
            key: value
            for key, value in (("seed", cmd.seed), ("dt", cmd.dt), ("duration", cmd.duration))
            if value is not None
        }
        tasks = [
            functools.partial(
                run_scenario,
                self._scenario_reader,
                path,
                plan,
                out_dir,
                overrides,
                self._options,
                self._telemetry_filename,
                self._report_filename,
            )
            for path, out_dir in zip(cmd.scenarios, self._out_dirs(cmd), strict=True)
        ]
        jobs = min(cmd.jobs, self._max_jobs, len(tasks))
        if jobs == 1:
            runs = [task() for task in tasks]
        else:
            loop = asyncio.get_running_loop()
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                runs = await asyncio.gather(*(loop.run_in_executor(pool, task) for task in tasks))
        return response.MissionRunList(runs=list(runs))

"""Simulation CLI commands."""

import asyncio

import rich.console
import rich.table
import typer

from src.cli import dependencies as deps
from src.cli.error_handling import handle_domain_errors
from src.mission.schema import command as command_module

console = rich.console.Console()
app = typer.Typer()


@app.command("run")
def run_mission(
    scenario: list[str] = typer.Option(..., "--scenario", "-s", help="Scenario file; repeat for several"),
    plan: str = typer.Option(..., "--plan", "-p", help="Mission plan file"),
    out: str = typer.Option("out", "--out", "-o", help="Output directory"),
    seed: int | None = typer.Option(None, "--seed", help="Override the scenario seed"),
    dt: float | None = typer.Option(None, "--dt", help="Override the step size [s]"),
    duration: float | None = typer.Option(None, "--duration", help="Override the mission time [s]"),
    jobs: int = typer.Option(1, "--jobs", "-j", help="Scenarios run in parallel"),
) -> None:
    """Run a mission plan and write telemetry.csv and report.txt."""
    asyncio.run(_run_mission(scenario, plan, out, seed, dt, duration, jobs))


@handle_domain_errors
async def _run_mission(
    scenarios: list[str],
    plan: str,
    out: str,
    seed: int | None,
    dt: float | None,
    duration: float | None,
    jobs: int,
) -> None:
    handler = deps.build_run_mission_handler()
    cmd = command_module.RunMission(
        scenarios=tuple(scenarios),
        plan=plan,
        out_dir=out,
        seed=seed,
        dt=dt,
        duration=duration,
        jobs=jobs,
    )
    result = await handler.handle(cmd)

    for run in result.runs:
        table = rich.table.Table(title=f"{run.scenario} (seed {run.seed})")
        table.add_column("Task", style="cyan")
        table.add_column("Kind")
        table.add_column("Outcome")
        table.add_column("Time [s]", justify="right")
        table.add_column("Note", style="dim")
        for task in run.tasks:
            style = "green" if task.phase == "DONE" else "red"
            table.add_row(
                task.name, task.kind, f"[{style}]{task.phase}[/{style}]", f"{task.duration:.2f}", task.note
            )
        console.print(table)
        if run.hard_killed:
            console.print("[yellow]Mission ended by hard kill[/yellow]")
        console.print(f"  Telemetry: {run.telemetry_path}")
        console.print(f"  Report: {run.report_path}")

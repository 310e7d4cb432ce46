"""Telemetry CLI command."""

import asyncio

import rich.console
import typer

from src.cli import dependencies as deps
from src.cli.error_handling import handle_domain_errors
from src.telemetry.schema import command as command_module

console = rich.console.Console()


def plot(
    telemetry: str = typer.Argument(..., help="telemetry.csv written by sim run"),
    out: str = typer.Option("telemetry.svg", "--out", "-o", help="SVG file to write"),
    columns: list[str] = typer.Option(
        list(command_module.DEFAULT_PLOT_COLUMNS), "--column", "-c", help="Column to chart; repeatable"
    ),
    title: str | None = typer.Option(None, "--title"),
) -> None:
    """Chart telemetry columns against time as an SVG file."""
    asyncio.run(_plot(telemetry, out, columns, title))


@handle_domain_errors
async def _plot(telemetry: str, out: str, columns: list[str], title: str | None) -> None:
    handler = deps.build_plot_telemetry_handler()
    cmd = command_module.PlotTelemetry(
        telemetry_path=telemetry, out_path=out, columns=tuple(columns), title=title
    )
    result = await handler.handle(cmd)
    console.print(f"[green]Wrote[/green] {result.path} ({result.rows} rows)")

"""Thruster allocation CLI command."""

import asyncio

import rich.console
import typer

from src.allocation.schema import command as command_module
from src.cli import dependencies as deps
from src.cli.error_handling import handle_domain_errors

console = rich.console.Console()


def allocate(
    tau: tuple[float, float, float, float, float, float] = typer.Option(
        ..., "--tau", help="Wrench X Y Z K M N in the body frame"
    ),
    params: str | None = typer.Option(None, "--params", help="Vehicle parameter file"),
) -> None:
    """Print the thrusts T1..T8 that produce a body wrench."""
    asyncio.run(_allocate(tau, params))


@handle_domain_errors
async def _allocate(tau: tuple[float, ...], params: str | None) -> None:
    handler = deps.build_allocate_wrench_handler()
    result = await handler.handle(command_module.AllocateWrench(tau=tau, params_path=params))
    console.print(result.render())
    if result.scale < 1.0:
        console.print(f"[yellow]Saturated: wrench scaled by {result.scale:.4f}[/yellow]")

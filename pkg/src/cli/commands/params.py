"""Vehicle parameter CLI commands."""

import asyncio

import rich.console
import typer

from src.cli import dependencies as deps
from src.cli.error_handling import handle_domain_errors
from src.core.schema import command as command_module

console = rich.console.Console()
app = typer.Typer()


@app.command("show")
def show_params(
    path: str | None = typer.Argument(None, help="Vehicle parameter file (defaults when omitted)"),
) -> None:
    """Print vehicle parameters and the resulting net heave force."""
    asyncio.run(_show_params(path))


@handle_domain_errors
async def _show_params(path: str | None) -> None:
    handler = deps.build_show_params_handler()
    listing = await handler.handle(command_module.ShowParams(params_path=path))
    console.print(listing.text, markup=False, highlight=False)
    console.print(f"# total mass {listing.total_mass:.3f} kg", markup=False)
    console.print(
        f"# weight {listing.weight:.2f} N, buoyancy {listing.buoyancy:.2f} N, "
        f"net heave {listing.net_heave:.2f} N",
        markup=False,
    )

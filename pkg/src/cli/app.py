"""CLI application entry point."""

import logging

import rich.console
import rich.logging
import typer

from src import settings as settings_module
from src.cli.commands import acoustics, allocation, params, sim, telemetry, vision

console = rich.console.Console()

app = typer.Typer(
    name="anahita",
    help="Anahita AUV simulator - dynamics, control, perception and missions",
    add_completion=False,
)

# Add subcommands
app.add_typer(sim.app, name="sim", help="Run missions")
app.add_typer(params.app, name="params", help="Inspect vehicle parameters")
app.add_typer(vision.app, name="vision", help="Image enhancement and detection")
app.add_typer(acoustics.app, name="acoustics", help="Pinger localization")
app.command("allocate")(allocation.allocate)
app.command("plot")(telemetry.plot)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level"),
) -> None:
    """Anahita AUV simulator CLI."""
    level = logging.DEBUG if verbose else settings_module.settings.log_level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[rich.logging.RichHandler(console=rich.console.Console(stderr=True), show_path=False)],
        force=True,
    )


if __name__ == "__main__":
    app()

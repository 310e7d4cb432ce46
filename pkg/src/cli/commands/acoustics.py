"""Acoustics CLI commands."""

import asyncio

import rich.console
import rich.table
import typer

from src.acoustics.schema import command as command_module
from src.cli import dependencies as deps
from src.cli.error_handling import handle_domain_errors

console = rich.console.Console()
app = typer.Typer()


@app.command("locate")
def locate_pinger(
    traces: str = typer.Option(..., "--traces", help="Directory with h0.txt..h3.txt"),
    side: float = typer.Option(0.2, "--side", help="Array side length [m]"),
    elevation: bool = typer.Option(False, "--elevation", help="Also estimate elevation"),
) -> None:
    """Print the pinger azimuth in degrees."""
    asyncio.run(_locate_pinger(traces, side, elevation))


@handle_domain_errors
async def _locate_pinger(traces: str, side: float, elevation: bool) -> None:
    handler = deps.build_locate_pinger_handler()
    bearing = await handler.handle(
        command_module.LocatePinger(traces_dir=traces, side=side, elevation=elevation)
    )
    line = f"{bearing.azimuth_deg:.2f}"
    if bearing.elevation_deg is not None:
        line += f" {bearing.elevation_deg:.2f}"
    console.print(line)


@app.command("synth")
def synthesize_ping(
    out: str = typer.Option(..., "--out", "-o", help="Directory for the trace files"),
    azimuth: float = typer.Option(0.0, "--azimuth", help="Pinger bearing [deg]"),
    distance: float = typer.Option(20.0, "--distance", help="Horizontal range [m]"),
    depth_below: float = typer.Option(0.0, "--below", help="Pinger depth below the array [m]"),
    snr: float | None = typer.Option(20.0, "--snr", help="Signal-to-noise ratio [dB]"),
    seed: int = typer.Option(0, "--seed"),
    raw: bool = typer.Option(False, "--raw", help="Skip the analog chain and ADC"),
) -> None:
    """Write synthetic hydrophone traces for one ping."""
    asyncio.run(_synthesize_ping(out, azimuth, distance, depth_below, snr, seed, raw))


@handle_domain_errors
async def _synthesize_ping(
    out: str, azimuth: float, distance: float, depth_below: float, snr: float | None, seed: int, raw: bool
) -> None:
    handler = deps.build_synthesize_ping_handler()
    cmd = command_module.SynthesizePing(
        out_dir=out,
        azimuth_deg=azimuth,
        distance=distance,
        depth_below=depth_below,
        snr_db=snr,
        seed=seed,
        condition=not raw,
    )
    result = await handler.handle(cmd)
    console.print(f"[green]Wrote {len(result.paths)} traces[/green] to {out}")
    console.print(
        f"  True delays: {result.true_delays_us[0]:.2f} us, {result.true_delays_us[1]:.2f} us"
    )


@app.command("evaluate")
def evaluate_heading(
    azimuths: list[float] = typer.Option([0.0, 30.0, -30.0, 60.0, -60.0], "--azimuth", help="Bearings [deg]"),
    snr: list[float] = typer.Option([20.0], "--snr", help="SNR levels [dB]"),
    draws: int = typer.Option(200, "--draws", help="Monte-Carlo draws per bearing"),
    seed: int = typer.Option(0, "--seed"),
    jobs: int = typer.Option(1, "--jobs", "-j"),
) -> None:
    """Monte-Carlo heading error over bearings and SNR levels."""
    asyncio.run(_evaluate_heading(azimuths, snr, draws, seed, jobs))


@handle_domain_errors
async def _evaluate_heading(
    azimuths: list[float], snr: list[float], draws: int, seed: int, jobs: int
) -> None:
    handler = deps.build_evaluate_heading_handler()
    cmd = command_module.EvaluateHeading(
        azimuths_deg=tuple(azimuths), snr_db=tuple(snr), draws=draws, seed=seed, jobs=jobs
    )
    result = await handler.handle(cmd)

    table = rich.table.Table(title="Heading error")
    table.add_column("SNR [dB]", justify="right")
    table.add_column("Azimuth [deg]", justify="right")
    table.add_column("Mean [deg]", justify="right")
    table.add_column("Max [deg]", justify="right")
    table.add_column("Failures", justify="right")
    for evaluation in result.evaluations:
        for score in evaluation.scores:
            table.add_row(
                "-" if evaluation.snr_db is None else f"{evaluation.snr_db:g}",
                f"{score.azimuth_deg:g}",
                f"{score.mean_error_deg:.3f}",
                f"{score.max_error_deg:.3f}",
                str(score.failures),
            )
    console.print(table)

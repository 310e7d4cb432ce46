"""Vision CLI commands."""

import asyncio

import rich.console
import typer

from src.cli import dependencies as deps
from src.cli.error_handling import handle_domain_errors
from src.vision.domain import model
from src.vision.schema import command as command_module

console = rich.console.Console()
app = typer.Typer()


@app.command("enhance")
def enhance_image(
    input_path: str = typer.Argument(..., help="PPM or PGM image"),
    output_path: str = typer.Argument(..., help="Where to write the enhanced image"),
    discard_ratio: float = typer.Option(0.005, "--discard", help="White-balance discard ratio"),
    clip_limit: float = typer.Option(2.0, "--clip", help="CLAHE clip limit"),
    tiles: tuple[int, int] = typer.Option((8, 8), "--tiles", help="CLAHE tile grid rows cols"),
) -> None:
    """White-balance and CLAHE an underwater image."""
    asyncio.run(_enhance_image(input_path, output_path, discard_ratio, clip_limit, tiles))


@handle_domain_errors
async def _enhance_image(
    input_path: str, output_path: str, discard_ratio: float, clip_limit: float, tiles: tuple[int, int]
) -> None:
    handler = deps.build_enhance_image_handler()
    cmd = command_module.EnhanceImage(
        input_path=input_path,
        output_path=output_path,
        discard_ratio=discard_ratio,
        clip_limit=clip_limit,
        tiles=tiles,
    )
    result = await handler.handle(cmd)
    console.print(f"[green]Wrote[/green] {result.output_path} ({result.width}x{result.height})")


@app.command("detect")
def detect_object(
    input_path: str = typer.Argument(..., help="PPM or PGM image"),
    output_path: str | None = typer.Option(None, "--annotate", help="Write the image with the box drawn"),
    enhance: bool = typer.Option(False, "--enhance", help="Run the blue filter first"),
    hue: tuple[float, float] = typer.Option((330.0, 30.0), "--hue", help="Hue range in degrees"),
    min_area: int = typer.Option(50, "--min-area", help="Smallest blob in pixels"),
    mode: model.DetectionMode = typer.Option(model.DetectionMode.CONTOUR, "--mode"),
    center: model.CenterMethod = typer.Option(model.CenterMethod.BOX, "--center"),
    calibration: list[str] = typer.Option(
        [], "--cal", help="blob_dim:distance sample; two or more enable ranging"
    ),
) -> None:
    """Print ``cx cy blob_dim distance`` of the dominant blob, or ``not found``."""
    asyncio.run(_detect_object(input_path, output_path, enhance, hue, min_area, mode, center, calibration))


def _calibration_pairs(values: list[str]) -> tuple[tuple[float, float], ...]:
    pairs = []
    for value in values:
        blob_dim, _, distance = value.partition(":")
        pairs.append((float(blob_dim), float(distance)))
    return tuple(pairs)


@handle_domain_errors
async def _detect_object(
    input_path: str,
    output_path: str | None,
    enhance: bool,
    hue: tuple[float, float],
    min_area: int,
    mode: model.DetectionMode,
    center: model.CenterMethod,
    calibration: list[str],
) -> None:
    handler = deps.build_detect_object_handler()
    try:
        pairs = _calibration_pairs(calibration)
    except ValueError as exc:
        console.print(f"[red]Validation error:[/red] calibration samples are blob_dim:distance ({exc})")
        raise typer.Exit(2) from exc
    cmd = command_module.DetectObject(
        input_path=input_path,
        output_path=output_path,
        enhance=enhance,
        config=model.DetectConfig(
            h_min=hue[0], h_max=hue[1], min_area=min_area, mode=mode, center_method=center
        ),
        calibration=pairs,
    )
    report = await handler.handle(cmd)
    console.print(report.render())

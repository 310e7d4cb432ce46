"""Telemetry command handlers."""

from src.telemetry.adapter import csv_file
from src.telemetry.schema import command, response
from src.telemetry.service import plot


class PlotTelemetryHandler:
    """Handle rendering telemetry columns to an SVG file."""

    async def handle(self, cmd: command.PlotTelemetry) -> response.PlotWritten:
        rows = csv_file.read_telemetry(cmd.telemetry_path)
        path = plot.plot_columns(rows, cmd.columns, cmd.out_path, title=cmd.title)
        return response.PlotWritten(path=str(path), rows=len(rows), columns=cmd.columns)

"""Telemetry CSV reader and writer."""

import csv
import io
import pathlib
from collections.abc import Iterable

from src import exceptions
from src.telemetry.domain import model


def render_csv(rows: Iterable[model.TelemetryRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(model.COLUMNS)
    previous = None
    for row in rows:
        if previous is not None and row.t <= previous:
            raise exceptions.ValidationError(
                f"telemetry time must increase strictly, got {row.t} after {previous}"
            )
        previous = row.t
        writer.writerow(row.to_record())
    return buffer.getvalue()


def parse_csv(text: str, source: str = "<telemetry>") -> list[model.TelemetryRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != model.COLUMNS:
        raise exceptions.ValidationError(f"{source}: header does not match the telemetry columns")
    rows = []
    for lineno, record in enumerate(reader, start=2):
        try:
            rows.append(model.TelemetryRow.from_record(record))
        except exceptions.ValidationError as exc:
            raise exceptions.ConfigParseError(f"{source}: {exc.message}", line=lineno) from exc
    return rows


def write_telemetry(path: str | pathlib.Path, rows: Iterable[model.TelemetryRow]) -> pathlib.Path:
    target = pathlib.Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_csv(rows), encoding="utf-8")
    return target


def read_telemetry(path: str | pathlib.Path) -> list[model.TelemetryRow]:
    source = pathlib.Path(path)
    if not source.is_file():
        raise exceptions.NotFoundError(f"Telemetry file not found: {source}")
    return parse_csv(source.read_text(encoding="utf-8"), source=str(source))


def column(rows: list[model.TelemetryRow], name: str) -> list[float]:
    """Values of one numeric column."""
    if name not in model.COLUMNS or name == "event":
        raise exceptions.ValidationError(f"unknown telemetry column: {name}")
    index = model.COLUMNS.index(name)
    return [float(row.to_record()[index]) for row in rows]

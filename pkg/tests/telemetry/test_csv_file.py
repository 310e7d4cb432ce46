"""Tests for telemetry rows and the CSV adapter."""

import pathlib

import pytest

from src import exceptions
from src.telemetry.adapter import csv_file
from src.telemetry.domain import model


def _row(t: float, z: float = 0.0, events: list[str] | None = None) -> model.TelemetryRow:
    return model.TelemetryRow.with_events(
        events or [],
        t=t,
        pose=(0.0, 0.0, z, 0.0, 0.0, 0.0),
        nu=(0.1, 0.0, 0.0, 0.0, 0.0, 0.0),
        thrusts=(0.0,) * 8,
        rail_voltages=(5.0, 12.0, 19.0, 25.2),
        rail_currents=(1.0, 0.5, 2.5, 0.0),
        depth_reading=z,
    )


class TestTelemetryRow:
    """Tests for TelemetryRow."""

    def test_columns_layout(self) -> None:
        assert model.COLUMNS[0] == "t"
        assert model.COLUMNS[-1] == "event"
        assert len(model.COLUMNS) == 31
        assert "v_19v" in model.COLUMNS

    def test_numbers_use_six_decimals(self) -> None:
        record = _row(0.01, z=-0.0).to_record()

        assert record[0] == "0.010000"
        assert record[3] == "0.000000"
        assert record[-1] == "-"

    def test_events_joined_into_one_cell(self) -> None:
        row = _row(1.0, events=["phase:gate:done", "drop"])

        assert row.event == "phase:gate:done;drop"
        assert row.events == ["phase:gate:done", "drop"]

    def test_event_cell_cannot_hold_commas(self) -> None:
        with pytest.raises(ValueError):
            _row(1.0, events=["a,b"])

    def test_short_record_rejected(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            model.TelemetryRow.from_record(["0.0", "-"])


class TestRenderCsv:
    """Tests for render_csv and parse_csv."""

    def test_header_first(self) -> None:
        # Act
        text = csv_file.render_csv([_row(0.0), _row(0.01)])

        # Assert
        lines = text.splitlines()
        assert lines[0] == ",".join(model.COLUMNS)
        assert len(lines) == 3

    def test_time_must_increase(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            csv_file.render_csv([_row(0.0), _row(0.0)])

    def test_parsed_rows_match_written(self) -> None:
        rows = [_row(0.0), _row(0.5, z=1.25, events=["drop"])]

        parsed = csv_file.parse_csv(csv_file.render_csv(rows))

        assert parsed == rows

    def test_wrong_header_rejected(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            csv_file.parse_csv("time,x\n0,0\n")

    def test_bad_cell_reports_line(self) -> None:
        text = csv_file.render_csv([_row(0.0)]) + ",".join(["oops"] * 30 + ["-"]) + "\n"

        with pytest.raises(exceptions.ConfigParseError) as exc_info:
            csv_file.parse_csv(text, source="run.csv")

        assert exc_info.value.line == 3
        assert "run.csv" in exc_info.value.message


class TestFiles:
    def test_write_then_read(self, tmp_path: pathlib.Path) -> None:
        path = csv_file.write_telemetry(tmp_path / "out" / "telemetry.csv", [_row(0.0), _row(0.01, z=0.5)])

        rows = csv_file.read_telemetry(path)

        assert csv_file.column(rows, "z") == [0.0, 0.5]

    def test_missing_file(self, tmp_path: pathlib.Path) -> None:
        with pytest.raises(exceptions.NotFoundError):
            csv_file.read_telemetry(tmp_path / "absent.csv")

    def test_unknown_column(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            csv_file.column([_row(0.0)], "event")

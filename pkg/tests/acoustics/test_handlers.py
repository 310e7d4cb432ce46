"""Tests for acoustics handlers."""

import pathlib

import pytest

from src.acoustics.handler import handlers
from src.acoustics.schema import command, response


class TestSynthesizeThenLocate:
    """Synthetic traces written by one handler are located by the other."""

    @pytest.mark.asyncio
    async def test_bearing_round_trip_through_files(self, tmp_path: pathlib.Path) -> None:
        # Arrange
        synth = handlers.SynthesizePingHandler()
        locate = handlers.LocatePingerHandler()

        # Act
        written = await synth.handle(
            command.SynthesizePing(out_dir=str(tmp_path), azimuth_deg=-30.0, snr_db=None)
        )
        bearing = await locate.handle(command.LocatePinger(traces_dir=str(tmp_path)))

        # Assert
        assert isinstance(bearing, response.Bearing)
        assert len(written.paths) == 4
        assert bearing.azimuth_deg == pytest.approx(-30.0, abs=1.0)
        assert bearing.elevation_deg is None


class TestEvaluateHeadingHandler:
    """Tests for EvaluateHeadingHandler."""

    @pytest.mark.asyncio
    async def test_one_evaluation_per_snr(self) -> None:
        handler = handlers.EvaluateHeadingHandler()

        result = await handler.handle(
            command.EvaluateHeading(azimuths_deg=(0.0,), snr_db=(20.0, 30.0), draws=3)
        )

        assert [evaluation.snr_db for evaluation in result.evaluations] == [20.0, 30.0]

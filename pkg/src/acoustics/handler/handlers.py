"""Acoustics command handlers."""

import asyncio
import concurrent.futures
import functools
import logging
import math
import pathlib

from src.acoustics.adapter import trace_files
from src.acoustics.domain import model
from src.acoustics.schema import command, response
from src.acoustics.service import chain, evaluation, localization, synthesis
from src.common import rng

logger = logging.getLogger(__name__)


class LocatePingerHandler:
    """Handle bearing estimation from recorded traces."""

    async def handle(self, cmd: command.LocatePinger) -> response.Bearing:
        traces = trace_files.read_array(pathlib.Path(cmd.traces_dir))
        geometry = model.ArrayGeometry.square(side=cmd.side, sound_speed=cmd.sound_speed)
        heading = localization.locate(traces, geometry, estimate_elevation=cmd.elevation)
        return response.Bearing.from_entity(heading)


class SynthesizePingHandler:
    """Handle writing synthetic hydrophone traces."""

    def __init__(
        self,
        ping: model.PingConfig | None = None,
        analog: model.AnalogChainConfig | None = None,
        adc_cfg: model.AdcConfig | None = None,
    ) -> None:
        self._ping = ping or model.PingConfig()
        self._analog = analog or model.AnalogChainConfig()
        self._adc = adc_cfg or model.AdcConfig()

    async def handle(self, cmd: command.SynthesizePing) -> response.SynthesizedTraces:
        geometry = model.ArrayGeometry.square(side=cmd.side)
        ping = self._ping.model_copy(update={"snr_db": cmd.snr_db})
        source = evaluation.pinger_at(math.radians(cmd.azimuth_deg), cmd.distance, cmd.depth_below)
        generator = rng.make_stream(cmd.seed, rng.Stream.ACOUSTICS)
        traces = synthesis.synth_ping(
            geometry, source, ping.frequency, ping, generator, fs=self._adc.fs, chain=self._analog
        )
        if cmd.condition:
            traces = chain.digitize(traces, self._analog, self._adc)
        paths = trace_files.write_array(pathlib.Path(cmd.out_dir), traces)

        delays = synthesis.true_delays(geometry, source)
        pair_delays = tuple(
            float(delays[pair[1]] - delays[pair[0]]) * 1e6
            for pair in (geometry.x_pair, geometry.y_pair)
        )
        logger.info("Wrote %d traces to %s", len(paths), cmd.out_dir)
        return response.SynthesizedTraces(
            paths=[str(path) for path in paths], true_delays_us=pair_delays
        )


class EvaluateHeadingHandler:
    """Handle the Monte-Carlo sweep; one SNR per worker process."""

    async def handle(self, cmd: command.EvaluateHeading) -> response.EvaluationSummary:
        geometry = model.ArrayGeometry.square(side=cmd.side)
        tasks = [
            functools.partial(
                evaluation.evaluate_heading,
                geometry,
                cmd.azimuths_deg,
                snr,
                cmd.draws,
                cmd.seed,
            )
            for snr in cmd.snr_db
        ]
        if cmd.jobs == 1 or len(tasks) == 1:
            results = [task() for task in tasks]
        else:
            loop = asyncio.get_running_loop()
            with concurrent.futures.ProcessPoolExecutor(max_workers=cmd.jobs) as pool:
                results = await asyncio.gather(
                    *(loop.run_in_executor(pool, task) for task in tasks)
                )
        return response.EvaluationSummary(evaluations=list(results))

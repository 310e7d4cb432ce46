"""Monte-Carlo bearing accuracy of the full acoustic chain."""

import logging
import math
from collections.abc import Sequence

import numpy as np
import pydantic

from src import exceptions
from src.acoustics.domain import model
from src.acoustics.service import chain, localization, synthesis
from src.common import angles, rng

logger = logging.getLogger(__name__)


class AzimuthScore(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    azimuth_deg: float
    mean_error_deg: float
    max_error_deg: float
    failures: int


class HeadingEvaluation(pydantic.BaseModel):
    """Bearing error statistics at one SNR."""

    model_config = pydantic.ConfigDict(frozen=True)

    snr_db: float | None
    draws: int
    scores: tuple[AzimuthScore, ...]

    @property
    def mean_error_deg(self) -> float:
        return float(np.mean([score.mean_error_deg for score in self.scores]))


def pinger_at(azimuth: float, distance: float, depth_below: float = 0.0) -> tuple[float, float, float]:
    """Body-frame pinger position at a bearing and horizontal range."""
    return (distance * math.cos(azimuth), distance * math.sin(azimuth), depth_below)


def evaluate_heading(
    geometry: model.ArrayGeometry,
    azimuths_deg: Sequence[float],
    snr_db: float | None,
    draws: int,
    seed: int,
    distance: float = 20.0,
    ping: model.PingConfig | None = None,
    analog: model.AnalogChainConfig | None = None,
    adc_cfg: model.AdcConfig | None = None,
) -> HeadingEvaluation:
    """Synthesise, condition, digitise and locate ``draws`` pings per azimuth.

    Draw ``k`` at azimuth index ``i`` uses its own stream, so results do not
    depend on evaluation order.
    """
    ping = (ping or model.PingConfig()).model_copy(update={"snr_db": snr_db})
    analog = analog or model.AnalogChainConfig()
    adc_cfg = adc_cfg or model.AdcConfig()

    scores = []
    for index, azimuth_deg in enumerate(azimuths_deg):
        truth = math.radians(azimuth_deg)
        source = pinger_at(truth, distance)
        errors = []
        failures = 0
        for draw in range(draws):
            generator = rng.make_stream(seed, rng.Stream.MONTE_CARLO, index, draw)
            raw = synthesis.synth_ping(
                geometry, source, ping.frequency, ping, generator, fs=adc_cfg.fs, chain=analog
            )
            try:
                estimate = localization.locate(chain.digitize(raw, analog, adc_cfg), geometry)
            except (exceptions.InfeasibleDelayError, exceptions.NoPeakError):
                failures += 1
                continue
            errors.append(abs(math.degrees(angles.shortest_angle(estimate.azimuth, truth))))
        scores.append(
            AzimuthScore(
                azimuth_deg=azimuth_deg,
                mean_error_deg=float(np.mean(errors)) if errors else math.inf,
                max_error_deg=float(np.max(errors)) if errors else math.inf,
                failures=failures,
            )
        )
        logger.info(
            "Azimuth %.1f deg: mean error %.3f deg over %d draws",
            azimuth_deg,
            scores[-1].mean_error_deg,
            draws,
        )
    return HeadingEvaluation(snr_db=snr_db, draws=draws, scores=tuple(scores))

"""Forward model of a pinger heard by the hydrophone array."""

import logging

import numpy as np

from src import exceptions
from src.acoustics.domain import model
from src.common import types as common_types

logger = logging.getLogger(__name__)

_MIN_RANGE = 1e-6


def tukey_envelope(local_time: np.ndarray, duration: float, taper: float) -> np.ndarray:
    """Continuous tapered-cosine window on [0, duration], zero outside."""
    envelope = ((local_time >= 0.0) & (local_time <= duration)).astype(float)
    if taper <= 0.0:
        return envelope
    ramp = taper * duration / 2.0
    rising = local_time < ramp
    falling = local_time > duration - ramp
    envelope = np.where(
        rising & (envelope > 0), 0.5 * (1.0 - np.cos(np.pi * local_time / ramp)), envelope
    )
    envelope = np.where(
        falling & (envelope > 0),
        0.5 * (1.0 - np.cos(np.pi * (duration - local_time) / ramp)),
        envelope,
    )
    return envelope


def true_delays(
    geometry: model.ArrayGeometry, pinger_position: common_types.Vector3
) -> np.ndarray:
    """Propagation time from the pinger to each hydrophone."""
    source = np.asarray(pinger_position, dtype=float)
    ranges = np.array(
        [np.linalg.norm(source - geometry.position(i)) for i in range(model.HYDROPHONE_COUNT)]
    )
    if np.any(ranges < _MIN_RANGE):
        raise exceptions.GeometryError("pinger coincides with a hydrophone")
    return ranges / geometry.sound_speed


def synth_ping(
    geometry: model.ArrayGeometry,
    pinger_position: common_types.Vector3,
    frequency: float,
    cfg: model.PingConfig,
    generator: np.random.Generator | None,
    fs: float = 1_000_000.0,
    chain: model.AnalogChainConfig | None = None,
) -> list[model.Trace]:
    """One ping per hydrophone: delayed, 1/r-scaled, tapered sinusoid plus noise.

    The recording window opens ``pre_trigger`` seconds before the earliest
    arrival. Noise is skipped when ``snr_db`` is None or no generator is given.
    """
    if fs <= 2.0 * frequency:
        raise exceptions.ValidationError(
            f"sample rate {fs} Hz must exceed twice the ping frequency {frequency} Hz"
        )
    if chain is not None and frequency >= chain.lpf_cutoff:
        raise exceptions.ValidationError(
            f"ping frequency {frequency} Hz is outside the {chain.lpf_cutoff} Hz passband"
        )
    delays = true_delays(geometry, pinger_position)
    amplitudes = cfg.source_level / (delays * geometry.sound_speed)
    n_samples = int(round(cfg.record_length * fs))
    start = float(delays.min()) - cfg.pre_trigger
    times = start + np.arange(n_samples) / fs

    noise_sigma = 0.0
    if cfg.snr_db is not None and generator is not None:
        ping_rms = float(amplitudes.mean()) / np.sqrt(2.0)
        noise_sigma = ping_rms / 10.0 ** (cfg.snr_db / 20.0)

    traces = []
    for delay, amplitude in zip(delays, amplitudes, strict=True):
        local = times - delay
        samples = (
            amplitude
            * tukey_envelope(local, cfg.duration, cfg.taper)
            * np.sin(2.0 * np.pi * frequency * local)
        )
        if noise_sigma > 0.0:
            samples = samples + generator.normal(0.0, noise_sigma, n_samples)
        traces.append(model.Trace(samples=samples, fs=fs))
    logger.debug(
        "Synthesised ping: delays %s us, noise sigma %.3g V",
        np.round(delays * 1e6, 3).tolist(),
        noise_sigma,
    )
    return traces

"""Analog conditioning and analog-to-digital conversion."""

import functools

import numpy as np
import scipy.signal

from src import exceptions
from src.acoustics.domain import model


@functools.lru_cache(maxsize=16)
def _design_lowpass(order: int, cutoff: float, fs: float) -> np.ndarray:
    sos = scipy.signal.butter(order, cutoff, btype="low", fs=fs, output="sos")
    sos.setflags(write=False)
    return sos


def lowpass_sos(order: int, cutoff: float, fs: float) -> np.ndarray:
    """Butterworth low-pass as cascaded biquads (bilinear transform, prewarped).

    Returns a writable copy of the cached design.
    """
    return _design_lowpass(order, cutoff, fs).copy()


def analog_chain(trace: model.Trace, cfg: model.AnalogChainConfig) -> model.Trace:
    """gain1, then the low-pass filter, then gain2."""
    if trace.fs <= 2.0 * cfg.lpf_cutoff:
        raise exceptions.ValidationError(
            f"sample rate {trace.fs} Hz must exceed twice the {cfg.lpf_cutoff} Hz cutoff"
        )
    sos = lowpass_sos(cfg.lpf_order, cfg.lpf_cutoff, trace.fs)
    filtered = scipy.signal.sosfilt(sos, trace.samples * cfg.gain1)
    return trace.with_samples(filtered * cfg.gain2)


def adc(trace: model.Trace, bits: int = 16, full_scale: float = 2.5) -> np.ndarray:
    """Clip to +/-full_scale and quantise to signed codes."""
    max_code = 2 ** (bits - 1) - 1
    clipped = np.clip(trace.samples, -full_scale, full_scale)
    return np.rint(clipped / full_scale * max_code).astype(np.int64)


def codes_to_trace(codes: np.ndarray, cfg: model.AdcConfig) -> model.Trace:
    """Reconstruct volts from ADC codes."""
    return model.Trace(samples=np.asarray(codes, dtype=float) * cfg.lsb, fs=cfg.fs)


def digitize(
    traces: list[model.Trace], chain: model.AnalogChainConfig, adc_cfg: model.AdcConfig
) -> list[model.Trace]:
    """Run every channel through the chain and the converter."""
    return [
        codes_to_trace(adc(analog_chain(trace, chain), adc_cfg.bits, adc_cfg.full_scale), adc_cfg)
        for trace in traces
    ]

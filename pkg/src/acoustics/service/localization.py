"""Cross-correlation TDOA and far-field bearing."""

import logging
import math
from collections.abc import Sequence

import numpy as np
import scipy.signal

from src import exceptions
from src.acoustics.domain import model

logger = logging.getLogger(__name__)

# float rounding allowed on |c*dt| / d at endfire
RATIO_TOLERANCE = 1e-9
# direction cosines below this are numerical residue of a zero delay
DIRECTION_EPS = 1e-9


def _parabolic_offset(values: np.ndarray, index: int) -> float:
    """Sub-sample vertex of the parabola through ``index`` and its neighbours."""
    if not 0 < index < values.size - 1:
        return 0.0
    left, centre, right = values[index - 1 : index + 2]
    curvature = left - 2.0 * centre + right
    if curvature >= 0.0:
        return 0.0
    return float(0.5 * (left - right) / curvature)


def tdoa(a: model.Trace, b: model.Trace, max_lag_s: float | None = None) -> float:
    """Delay of ``b`` relative to ``a`` in seconds, positive when ``b`` lags.

    A narrowband ping correlates almost equally well one carrier cycle off,
    so the lag is first taken from the peak of the correlation envelope
    (Hilbert magnitude). The correlation peak nearest that lag is then refined
    by a parabola through it and its two neighbours. ``max_lag_s`` restricts
    the search and bounds the returned delay.
    """
    if a.fs != b.fs or len(a) != len(b):
        raise exceptions.ValidationError("traces must share sample rate and length")
    if not np.any(a.samples) or not np.any(b.samples):
        raise exceptions.NoPeakError("cross-correlation of an all-zero trace has no peak")

    correlation = scipy.signal.correlate(b.samples, a.samples, mode="full")
    lags = scipy.signal.correlation_lags(len(b), len(a), mode="full")
    envelope = np.abs(scipy.signal.hilbert(correlation))
    if max_lag_s is not None:
        window = np.abs(lags) <= int(math.ceil(max_lag_s * a.fs)) + 1
        correlation, lags, envelope = correlation[window], lags[window], envelope[window]

    coarse_index = int(np.argmax(envelope))
    coarse = coarse_index + _parabolic_offset(envelope, coarse_index)
    peaks, _ = scipy.signal.find_peaks(correlation)
    if peaks.size:
        peak = int(peaks[np.argmin(np.abs(peaks - coarse))])
    else:
        peak = int(np.argmax(correlation))
    delay = (float(lags[peak]) + _parabolic_offset(correlation, peak)) / a.fs
    if max_lag_s is not None:
        delay = min(max(delay, -max_lag_s), max_lag_s)
    return delay


def _direction_cosine(delay: float, baseline: float, sound_speed: float) -> float:
    ratio = sound_speed * delay / baseline
    if abs(ratio) > 1.0 + RATIO_TOLERANCE:
        raise exceptions.InfeasibleDelayError(
            f"delay {delay * 1e6:.2f} us needs {abs(ratio):.3f}x the {baseline} m baseline"
        )
    # a ray arriving from the pair's +axis reaches the second hydrophone first
    return -min(max(ratio, -1.0), 1.0)


def heading(
    delays: Sequence[float],
    geometry: model.ArrayGeometry,
    estimate_elevation: bool = False,
) -> model.AcousticHeading:
    """Far-field bearing from the x-pair and y-pair delays."""
    delay_x, delay_y = float(delays[0]), float(delays[1])
    axis_x = geometry.pair_vector(geometry.x_pair)
    axis_y = geometry.pair_vector(geometry.y_pair)
    baseline_x = float(np.linalg.norm(axis_x))
    baseline_y = float(np.linalg.norm(axis_y))
    unit_x, unit_y = axis_x / baseline_x, axis_y / baseline_y
    if abs(float(unit_x @ unit_y)) > 1e-6:
        raise exceptions.GeometryError("bearing pairs must be orthogonal")

    cos_x = _direction_cosine(delay_x, baseline_x, geometry.sound_speed)
    cos_y = _direction_cosine(delay_y, baseline_y, geometry.sound_speed)
    direction = cos_x * unit_x + cos_y * unit_y
    horizontal = math.hypot(direction[0], direction[1])
    azimuth = math.atan2(direction[1], direction[0]) if horizontal > DIRECTION_EPS else 0.0

    elevation = None
    if estimate_elevation:
        elevation = math.acos(min(1.0, math.hypot(cos_x, cos_y)))
    return model.AcousticHeading(
        azimuth=azimuth,
        elevation=elevation,
        cos_x=cos_x,
        cos_y=cos_y,
        delays=(delay_x, delay_y),
    )


def locate(
    traces: Sequence[model.Trace],
    geometry: model.ArrayGeometry,
    estimate_elevation: bool = False,
) -> model.AcousticHeading:
    """Bearing from four recorded channels."""
    if len(traces) != model.HYDROPHONE_COUNT:
        raise exceptions.ValidationError(
            f"expected {model.HYDROPHONE_COUNT} traces, got {len(traces)}"
        )
    delays = []
    for pair in (geometry.x_pair, geometry.y_pair):
        max_lag = geometry.max_delay(pair)
        delays.append(tdoa(traces[pair[0]], traces[pair[1]], max_lag_s=max_lag))
    result = heading(delays, geometry, estimate_elevation=estimate_elevation)
    logger.debug("Acoustic bearing %.2f deg", result.azimuth_deg)
    return result

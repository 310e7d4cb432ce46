"""Behavioural IMU, depth and DVL models.

A reading of ``None`` means the device dropped the sample; callers keep
their last good value.
"""

import logging

import numpy as np

from src.common import angles, rng
from src.dynamics.domain import model as dynamics_model
from src.sensors.domain import model

logger = logging.getLogger(__name__)


def _noise(generator: np.random.Generator, sigma: float, size: int) -> np.ndarray:
    if sigma == 0.0:
        return np.zeros(size)
    return generator.normal(0.0, sigma, size)


def _dropped(generator: np.random.Generator, probability: float) -> bool:
    return probability > 0.0 and generator.random() < probability


def quantize_depth(depth: float) -> float:
    """Round half-even onto the 2 mm grid; clamps to the surface."""
    steps = np.round(np.round(max(depth, 0.0) / model.DEPTH_RESOLUTION, 9))
    return float(steps) * model.DEPTH_RESOLUTION


def imu_read(
    state: dynamics_model.VehicleState,
    cfg: model.NoiseConfig,
    generator: np.random.Generator,
) -> model.ImuReading | None:
    """Attitude and body rates plus noise; yaw also carries the magnetic bias."""
    if _dropped(generator, cfg.dropout):
        logger.debug("IMU dropout at t=%.3f", state.t)
        return None
    attitude = state.pose.attitude + _noise(generator, cfg.attitude_sigma, 3)
    rates = state.nu.angular + _noise(generator, cfg.rate_sigma, 3)
    return model.ImuReading(
        roll=float(attitude[0]),
        pitch=float(attitude[1]),
        yaw=angles.wrap_angle(float(attitude[2]) + cfg.yaw_bias),
        p=float(rates[0]),
        q=float(rates[1]),
        r=float(rates[2]),
        timestamp=state.t,
    )


def depth_read(
    z: float, cfg: model.NoiseConfig, generator: np.random.Generator, timestamp: float = 0.0
) -> model.DepthReading:
    noisy = z + float(_noise(generator, cfg.depth_sigma, 1)[0])
    return model.DepthReading(depth=quantize_depth(noisy), timestamp=timestamp)


def dvl_read(
    state: dynamics_model.VehicleState,
    cfg: model.NoiseConfig,
    generator: np.random.Generator,
) -> model.DvlReading | None:
    """Body-frame linear velocity plus noise."""
    if _dropped(generator, cfg.dropout):
        logger.debug("DVL dropout at t=%.3f", state.t)
        return None
    velocity = state.nu.linear + _noise(generator, cfg.dvl_sigma, 3)
    return model.DvlReading(
        u=float(velocity[0]), v=float(velocity[1]), w=float(velocity[2]), timestamp=state.t
    )


class SensorSuite:
    """IMU, depth sensor and DVL, each on its own seeded stream."""

    def __init__(self, cfg: model.NoiseConfig, seed: int) -> None:
        self._cfg = cfg
        self._imu = rng.make_stream(seed, rng.Stream.IMU)
        self._depth = rng.make_stream(seed, rng.Stream.DEPTH)
        self._dvl = rng.make_stream(seed, rng.Stream.DVL)

    @property
    def config(self) -> model.NoiseConfig:
        return self._cfg

    def read_imu(self, state: dynamics_model.VehicleState) -> model.ImuReading | None:
        return imu_read(state, self._cfg, self._imu)

    def read_depth(self, state: dynamics_model.VehicleState) -> model.DepthReading:
        return depth_read(state.pose.z, self._cfg, self._depth, timestamp=state.t)

    def read_dvl(self, state: dynamics_model.VehicleState) -> model.DvlReading | None:
        return dvl_read(state, self._cfg, self._dvl)

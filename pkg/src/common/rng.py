"""Seeded random streams.

Every stochastic component owns an independent generator derived from the
master seed and a fixed stream id, so adding draws in one component never
shifts the sequence seen by another.
"""

import enum

import numpy as np

MAX_SEED = 2**64 - 1


class Stream(enum.IntEnum):
    """Stream ids; values are part of the reproducibility contract."""

    IMU = 1
    DEPTH = 2
    DVL = 3
    ACOUSTICS = 4
    POWER = 5
    VISION = 6
    MONTE_CARLO = 7


def make_stream(seed: int, stream: Stream | int, *sub: int) -> np.random.Generator:
    """Return the generator for (seed, stream, *sub)."""
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(int(stream), *sub))
    return np.random.Generator(np.random.PCG64(sequence))

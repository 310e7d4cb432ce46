"""Tests for seeded random streams."""

import pytest

from src.common import rng


class TestMakeStream:
    """Tests for stream derivation."""

    def test_same_seed_and_stream_repeat(self) -> None:
        first = rng.make_stream(7, rng.Stream.IMU).normal(size=5)
        second = rng.make_stream(7, rng.Stream.IMU).normal(size=5)

        assert list(first) == list(second)

    def test_streams_are_independent(self) -> None:
        imu = rng.make_stream(7, rng.Stream.IMU).normal(size=5)
        depth = rng.make_stream(7, rng.Stream.DEPTH).normal(size=5)

        assert list(imu) != list(depth)

    def test_sub_streams_differ(self) -> None:
        a = rng.make_stream(7, rng.Stream.MONTE_CARLO, 0).normal()
        b = rng.make_stream(7, rng.Stream.MONTE_CARLO, 1).normal()

        assert a != b

    def test_rejects_negative_seed(self) -> None:
        with pytest.raises(ValueError):
            rng.make_stream(-1, rng.Stream.IMU)

    def test_accepts_full_64_bit_range(self) -> None:
        rng.make_stream(rng.MAX_SEED, rng.Stream.POWER).random()

"""Tests for the latest-value bus."""

import pytest

from src import exceptions
from src.mission.service import bus


class TestBus:
    """Tests for Bus."""

    def test_latest_is_none_before_publish(self) -> None:
        assert bus.Bus().latest(bus.Topic.IMU) is None

    def test_keeps_only_latest(self) -> None:
        # Arrange
        channel = bus.Bus()

        # Act
        channel.publish(bus.Topic.DEPTH, 0.0, 1.0)
        channel.publish(bus.Topic.DEPTH, 0.1, 2.0)

        # Assert
        message = channel.latest(bus.Topic.DEPTH)
        assert message is not None
        assert message.payload == 2.0
        assert message.timestamp == 0.1

    def test_unknown_topic(self) -> None:
        with pytest.raises(exceptions.UnknownTopicError):
            bus.Bus().publish("sonar", 0.0, None)

    def test_registered_topic_accepted(self) -> None:
        channel = bus.Bus()
        channel.register("sonar")

        channel.publish("sonar", 0.0, 3)

        assert "sonar" in channel.topics

    def test_timestamps_cannot_go_back(self) -> None:
        channel = bus.Bus()
        channel.publish(bus.Topic.IMU, 1.0, None)

        with pytest.raises(exceptions.ValidationError):
            channel.publish(bus.Topic.IMU, 0.5, None)

    def test_fresh_respects_age(self) -> None:
        channel = bus.Bus()
        channel.publish(bus.Topic.FORWARD_DETECTION, 1.0, "blob")

        assert channel.fresh(bus.Topic.FORWARD_DETECTION, 1.1, 0.15) is not None
        assert channel.fresh(bus.Topic.FORWARD_DETECTION, 1.2, 0.15) is None

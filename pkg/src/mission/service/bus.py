"""Latest-value publish/subscribe bus between the loop's components."""

import enum
import logging
from collections.abc import Iterable
from typing import Any

import pydantic

from src import exceptions

logger = logging.getLogger(__name__)


class Topic(enum.StrEnum):
    IMU = "imu"
    DEPTH = "depth"
    DVL = "dvl"
    FORWARD_DETECTION = "vision/forward"
    DOWN_DETECTION = "vision/down"
    ACOUSTIC_HEADING = "acoustics/heading"


class BusMessage(pydantic.BaseModel):
    """A published value; ``payload`` None means the producer saw nothing."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    topic: str
    timestamp: float
    payload: Any = None


class Bus:
    """Keeps only the most recent message per registered topic."""

    def __init__(self, topics: Iterable[str] = tuple(Topic)) -> None:
        self._latest: dict[str, BusMessage | None] = {str(topic): None for topic in topics}

    @property
    def topics(self) -> list[str]:
        return list(self._latest)

    def register(self, topic: str) -> None:
        self._latest.setdefault(str(topic), None)

    def _require(self, topic: str) -> str:
        key = str(topic)
        if key not in self._latest:
            raise exceptions.UnknownTopicError(f"Topic not registered: {key}")
        return key

    def publish(self, topic: str, timestamp: float, payload: Any = None) -> BusMessage:
        key = self._require(topic)
        previous = self._latest[key]
        if previous is not None and timestamp < previous.timestamp:
            raise exceptions.ValidationError(
                f"{key}: timestamp {timestamp} is older than {previous.timestamp}"
            )
        message = BusMessage(topic=key, timestamp=timestamp, payload=payload)
        self._latest[key] = message
        return message

    def latest(self, topic: str) -> BusMessage | None:
        """Most recent message, or None before the first publish."""
        return self._latest[self._require(topic)]

    def fresh(self, topic: str, now: float, max_age: float) -> BusMessage | None:
        message = self.latest(topic)
        if message is None or now - message.timestamp > max_age:
            return None
        return message

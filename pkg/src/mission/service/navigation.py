"""Dead-reckoning pose estimate from the sensor topics."""

import math

import numpy as np

from src.common import angles
from src.core.domain import model as core_model
from src.core.service import kinematics
from src.mission.service import bus as bus_service


def target_frame_point(
    origin: tuple[float, float, float], heading: float, offset: tuple[float, float, float]
) -> np.ndarray:
    """World point at ``offset`` (forward, right, down) in a frame at ``origin`` facing ``heading``."""
    forward, right, down = offset
    c, s = math.cos(heading), math.sin(heading)
    return np.asarray(origin, dtype=float) + np.array(
        [forward * c - right * s, forward * s + right * c, down]
    )


class Navigator:
    """Attitude from the IMU, depth from the pressure sensor, x and y from DVL integration.

    Dropped samples leave the previous value in place.
    """

    def __init__(self, initial: core_model.Pose) -> None:
        self._position = initial.position.astype(float)
        self._attitude = initial.attitude.astype(float)
        self._velocity = np.zeros(3)
        self._seen: dict[str, float] = {}

    @property
    def pose(self) -> core_model.Pose:
        return core_model.Pose(
            x=float(self._position[0]),
            y=float(self._position[1]),
            z=float(self._position[2]),
            phi=float(self._attitude[0]),
            theta=float(self._attitude[1]),
            psi=float(self._attitude[2]),
        )

    @property
    def velocity(self) -> np.ndarray:
        return self._velocity.copy()

    def _new(self, bus: bus_service.Bus, topic: bus_service.Topic) -> bus_service.BusMessage | None:
        message = bus.latest(topic)
        if message is None or message.payload is None:
            return None
        if self._seen.get(topic) == message.timestamp:
            return None
        self._seen[topic] = message.timestamp
        return message

    def update(self, bus: bus_service.Bus, dt: float) -> core_model.Pose:
        imu = self._new(bus, bus_service.Topic.IMU)
        if imu is not None:
            reading = imu.payload
            self._attitude = np.array([reading.roll, reading.pitch, angles.wrap_angle(reading.yaw)])
        dvl = self._new(bus, bus_service.Topic.DVL)
        if dvl is not None:
            reading = dvl.payload
            self._velocity = np.array([reading.u, reading.v, reading.w])
        depth = self._new(bus, bus_service.Topic.DEPTH)

        pose = self.pose
        world = kinematics.body_to_world(pose, self._velocity)
        self._position[:2] += world[:2] * dt
        if depth is not None:
            self._position[2] = depth.payload.depth
        else:
            self._position[2] += world[2] * dt
        return self.pose

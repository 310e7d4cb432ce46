"""Closed-loop mission execution.

One tick runs, in order: scheduled power events, sensors, bus, navigation,
decimated vision and acoustics, master layer and task handler, control,
allocation, payloads, dynamics, projectiles and power.
"""

import logging
import math

import numpy as np

from src import exceptions
from src.acoustics.domain import model as acoustics_model
from src.acoustics.service import chain, localization, synthesis
from src.allocation.domain import model as allocation_model
from src.allocation.service import allocator
from src.common import rng
from src.control.domain import model as control_model
from src.control.service import motion
from src.core.domain import model as core_model
from src.core.service import kinematics
from src.dynamics.domain import model as dynamics_model
from src.dynamics.service import integrator
from src.mission.domain import model
from src.mission.domain.scenario import Scenario
from src.mission.domain.status import TaskKind, TaskPhase, TransitStatus
from src.mission.service import bus as bus_service
from src.mission.service import master, navigation, tasks
from src.payloads.domain import model as payloads_model
from src.payloads.service import ballistics, dropper, grabber, torpedo
from src.power.domain import model as power_model
from src.power.service import power
from src.sensors.service import readers
from src.telemetry.domain import model as telemetry_model
from src.vision.domain import camera
from src.vision.domain import model as vision_model
from src.vision.service import camera as camera_service
from src.vision.service import detection, enhancement, ranging

logger = logging.getLogger(__name__)

TORPEDO_CAPACITY = 2
SOLENOID_CURRENT = 0.8
TORPEDO_FLIGHT_LIMIT = 10.0
FORWARD_CAMERA_OFFSET = (0.35, 0.0, 0.0)
DOWN_CAMERA_OFFSET = (0.0, 0.0, 0.15)
CALIBRATION_RANGES = {camera.TargetKind.GATE: (1.5, 3.0)}
DEFAULT_CALIBRATION_RANGES = (1.0, 2.0)
MISSION_DETECT = vision_model.DetectConfig(kernel=3, min_area=12)


class _Flight:
    """A projectile in the water and the target it was released at."""

    def __init__(self, projectile: payloads_model.Projectile, target: camera.VisualTarget, t: float):
        self.projectile = projectile
        self.target = target
        self.launched = t
        axis = projectile.axis or (0.0, 0.0, 1.0)
        self.normal = np.array([axis[0], axis[1], 0.0])
        norm = float(np.linalg.norm(self.normal))
        self.normal = self.normal / norm if norm > 0 else np.array([1.0, 0.0, 0.0])


class MissionRunner:
    """Runs one plan against one scenario; every random draw derives from the scenario seed."""

    def __init__(
        self,
        plan: model.MissionPlan,
        scenario: Scenario,
        vision_decimation: int = 10,
        acoustics_decimation: int = 100,
        camera_width: int = 160,
        camera_height: int = 120,
        telemetry_decimation: int = 1,
    ) -> None:
        if min(vision_decimation, acoustics_decimation, telemetry_decimation) < 1:
            raise exceptions.ValidationError("decimation factors must be at least 1")
        self._plan = plan
        self._scenario = scenario
        self._targets = _resolve_targets(plan, scenario)
        self._vision_every = vision_decimation
        self._acoustics_every = acoustics_decimation
        self._telemetry_every = telemetry_decimation

        seed = scenario.sim.seed
        self._state = dynamics_model.VehicleState.at_rest(scenario.initial)
        self._sensors = readers.SensorSuite(scenario.noise, seed)
        self._power = power.PowerSystem(
            scenario.power, scenario.power_events, rng.make_stream(seed, rng.Stream.POWER)
        )
        self._acoustic_rng = rng.make_stream(seed, rng.Stream.ACOUSTICS)
        self._bus = bus_service.Bus()
        self._navigator = navigation.Navigator(scenario.initial)
        self._controller = motion.MotionController(scenario.gains)
        self._matrix = allocation_model.AllocationMatrix.from_params(scenario.params)
        self._matrix.require_full_rank()

        self._cameras = {
            camera.CameraMount.FORWARD: camera.CameraConfig(
                mount=camera.CameraMount.FORWARD,
                width=camera_width,
                height=camera_height,
                offset=FORWARD_CAMERA_OFFSET,
            ),
            camera.CameraMount.DOWN: camera.CameraConfig(
                mount=camera.CameraMount.DOWN,
                width=camera_width,
                height=camera_height,
                offset=DOWN_CAMERA_OFFSET,
            ),
        }
        self._geometry = acoustics_model.ArrayGeometry.square(scenario.array_side)
        self._analog = acoustics_model.AnalogChainConfig()
        self._adc = acoustics_model.AdcConfig()
        self._detect_configs: dict[str, vision_model.DetectConfig] = {}
        self._calibrations: dict[str, vision_model.Calibration | None] = {}

        self._dropper = payloads_model.DropperState()
        self._torpedoes = TORPEDO_CAPACITY
        self._grabber = payloads_model.GrabberState()
        self._held: str | None = None
        self._flights: list[_Flight] = []
        self._payload_events: list[str] = []
        self._tick_events: list[str] = []

        self._task_index = 0
        self._transit_index = 0
        self._transit_goal: control_model.MotionGoal | None = None
        self._transit_started = 0.0
        self._transit_outcomes: list[model.TransitOutcome] = []
        self._task_started: float | None = None
        self._task_state = model.TaskState()
        self._outcomes: list[model.TaskOutcome] = []
        self._hold = control_model.MotionGoal.from_pose(
            scenario.initial.model_copy(update={"phi": 0.0, "theta": 0.0})
        )
        self._depth_reading = 0.0
        self._hard_killed = False
        self._dt = scenario.sim.dt
        self._thrusts = np.zeros(8)
        self._request_target: camera.VisualTarget | None = None

    # perception -------------------------------------------------------

    def _detect_config(self, target: camera.VisualTarget) -> vision_model.DetectConfig:
        if target.name not in self._detect_configs:
            base = MISSION_DETECT
            if target.kind == camera.TargetKind.GATE:
                base = base.model_copy(
                    update={"components": 2, "blob_dim": vision_model.BlobDimension.WIDTH}
                )
            self._detect_configs[target.name] = detection.config_for_color(target.color, base=base)
        return self._detect_configs[target.name]

    def _calibration(self, target: camera.VisualTarget) -> vision_model.Calibration | None:
        """Fit the blob-size ranging curve by rendering the target at two known ranges."""
        if target.name in self._calibrations:
            return self._calibrations[target.name]
        cam = self._cameras[target.kind.camera]
        points = []
        for distance in CALIBRATION_RANGES.get(target.kind, DEFAULT_CALIBRATION_RANGES):
            pose = _viewpoint(cam, target, distance)
            frame = camera_service.render_view(cam, pose, [target])
            found = detection.detect(frame, self._detect_config(target))
            if found is not None:
                points.append((found.blob_dim, distance))
        calibration = None
        try:
            calibration = ranging.calibrate(points)
        except exceptions.ValidationError as exc:
            logger.warning("No range calibration for %s: %s", target.name, exc.message)
        self._calibrations[target.name] = calibration
        return calibration

    def _run_vision(self, target: camera.VisualTarget, t: float) -> None:
        mount = target.kind.camera
        cam = self._cameras[mount]
        visible = [item for item in self._scenario.targets if item.name != self._held]
        frame = camera_service.render_view(cam, self._state.pose, visible)
        water = self._scenario.water
        if water.degrade:
            seen = camera_service.to_camera(cam, self._state.pose, np.asarray(target.position))
            distance = seen[2] if seen is not None else 0.0
            frame = enhancement.degrade(
                frame,
                vision_model.DegradeConfig(beta=water.beta, backlight=water.backlight, distance=distance),
            )
        if water.enhance:
            frame = enhancement.blue_filter(frame, clip_limit=water.clip_limit)
        found = detection.detect(frame, self._detect_config(target))
        calibration = self._calibration(target)
        if found is not None and calibration is not None:
            found = found.with_distance(ranging.estimate_distance(found.blob_dim, calibration))
        topic = (
            bus_service.Topic.FORWARD_DETECTION
            if mount == camera.CameraMount.FORWARD
            else bus_service.Topic.DOWN_DETECTION
        )
        self._bus.publish(topic, t, found)

    def _run_acoustics(self, target: camera.VisualTarget, t: float) -> None:
        relative = kinematics.world_to_body(
            self._state.pose, np.asarray(target.position) - self._state.pose.position
        )
        frequency = target.frequency or self._scenario.ping.frequency
        heading = None
        try:
            traces = synthesis.synth_ping(
                self._geometry,
                tuple(relative),
                frequency,
                self._scenario.ping,
                self._acoustic_rng,
                fs=self._adc.fs,
                chain=self._analog,
            )
            traces = chain.digitize(traces, self._analog, self._adc)
            heading = localization.locate(traces, self._geometry, estimate_elevation=True)
        except (exceptions.NoPeakError, exceptions.InfeasibleDelayError, exceptions.GeometryError) as exc:
            logger.debug("No acoustic fix at t=%.2f: %s", t, exc.message)
        self._bus.publish(bus_service.Topic.ACOUSTIC_HEADING, t, heading)

    def _publish_sensors(self, t: float) -> None:
        imu = self._sensors.read_imu(self._state)
        depth = self._sensors.read_depth(self._state)
        dvl = self._sensors.read_dvl(self._state)
        self._bus.publish(bus_service.Topic.IMU, t, imu)
        self._bus.publish(bus_service.Topic.DEPTH, t, depth)
        self._bus.publish(bus_service.Topic.DVL, t, dvl)
        self._depth_reading = depth.depth

    # master layer and task handlers ----------------------------------

    @property
    def _current(self) -> model.Task | None:
        if self._task_index >= len(self._plan.tasks):
            return None
        return self._plan.tasks[self._task_index]

    def _in_transit(self, task: model.Task) -> bool:
        return self._transit_index < len(task.transit)

    def _context(self, task: model.Task, target: camera.VisualTarget, t: float, dt: float, pose: core_model.Pose) -> tasks.TaskContext:
        vision_age = 1.5 * self._vision_every * dt
        acoustic_age = 1.5 * self._acoustics_every * dt
        cam = self._cameras[target.kind.camera] if target.kind.camera is not None else None
        found = None
        if cam is not None:
            topic = (
                bus_service.Topic.FORWARD_DETECTION
                if cam.mount == camera.CameraMount.FORWARD
                else bus_service.Topic.DOWN_DETECTION
            )
            message = self._bus.fresh(topic, t, vision_age)
            found = message.payload if message is not None else None
        message = self._bus.fresh(bus_service.Topic.ACOUSTIC_HEADING, t, acoustic_age)
        heading = message.payload if message is not None else None
        if task.kind != TaskKind.PINGER:
            heading = None
        return tasks.TaskContext(
            t=t,
            dt=dt,
            pose=pose,
            target=target,
            camera=cam,
            detection=found,
            heading=heading,
            markers_left=self._dropper.balls_remaining,
            torpedoes_left=self._torpedoes,
            grabber=self._grabber,
        )

    def _finish_task(self, task: model.Task, t: float, phase: TaskPhase, note: str) -> None:
        self._outcomes.append(
            model.TaskOutcome(
                name=task.name,
                kind=task.kind,
                target=task.target,
                phase=phase,
                started=self._task_started if self._task_started is not None else t,
                finished=t,
                transits=tuple(self._transit_outcomes),
                note=note,
            )
        )
        logger.info("Task %s finished %s at t=%.2f %s", task.name, phase, t, note)
        self._task_index += 1
        self._transit_index = 0
        self._transit_goal = None
        self._transit_outcomes = []
        self._task_started = None
        self._task_state = model.TaskState()
        self._controller.reset()

    def _sequence(
        self, t: float, dt: float, pose: core_model.Pose
    ) -> tuple[control_model.MotionGoal, model.PayloadRequest | None, frozenset[control_model.Axis] | None]:
        task = self._current
        if task is None:
            return self._hold, None, None
        if self._task_started is None:
            self._task_started = t

        while self._in_transit(task):
            transit = task.transit[self._transit_index]
            if not transit.enabled:
                self._transit_index += 1
                continue
            if self._transit_goal is None:
                self._transit_goal = master.transit_goal(transit, pose)
                self._transit_started = t
            status = None
            if master.transit_reached(transit, self._transit_goal, pose):
                status = TransitStatus.REACHED
            elif t - self._transit_started >= transit.timeout:
                status = TransitStatus.TIMEOUT
            if status is None:
                return self._transit_goal, None, task.switches
            self._transit_outcomes.append(
                model.TransitOutcome(motion=transit.motion, status=status, duration=t - self._transit_started)
            )
            logger.info("Transit %s %s after %.2f s", transit.motion, status, t - self._transit_started)
            self._hold = self._transit_goal
            self._transit_index += 1
            self._transit_goal = None

        target = self._targets[task.name]
        previous = self._task_state.phase
        state, action = tasks.task_step(task, self._task_state, self._context(task, target, t, dt, pose))
        self._task_state = state
        if state.phase != previous:
            self._tick_events.append(f"{task.name}:{state.phase}")
            logger.info("Task %s %s -> %s at t=%.2f", task.name, previous, state.phase, t)
        if action.goal is not None:
            self._hold = action.goal
        self._request_target = target
        if state.phase.is_terminal:
            self._finish_task(task, t, state.phase, state.note)
        return self._hold, action.payload, task.switches

    # payloads -----------------------------------------------------------

    def _apply_payload(self, request: model.PayloadRequest | None, t: float) -> dict[power_model.Rail, float]:
        solenoid = False
        target = self._request_target
        if request is not None and request.kind == model.PayloadKind.DROP:
            self._dropper, marker = dropper.drop(self._dropper, self._state)
            self._flights.append(_Flight(marker, target, t))
            self._tick_events.append("marker_drop")
            solenoid = True
        elif request is not None and request.kind == model.PayloadKind.LAUNCH:
            self._flights.append(_Flight(torpedo.launch_torpedo(self._state), target, t))
            self._torpedoes -= 1
            self._tick_events.append("torpedo_launch")
            solenoid = True
        elif request is not None and request.kind == model.PayloadKind.GRABBER:
            self._grabber = grabber.command(self._grabber, request.grabber)
            self._tick_events.append(f"grabber_{request.grabber.action}")

        was_holding = self._grabber.holding
        solenoid = solenoid or self._grabber.busy
        self._grabber = grabber.advance(self._grabber, self._dt, self._nearest_object())
        if self._grabber.holding and not was_holding:
            self._held = self._nearest_object_name()
            self._tick_events.append("grabbed")
        elif was_holding and not self._grabber.holding:
            self._held = None
        return {power_model.Rail.V12: SOLENOID_CURRENT} if solenoid else {}

    def _objects(self) -> list[tuple[float, str]]:
        tip = grabber.fingertip_position(self._grabber, self._state)
        return sorted(
            (float(np.linalg.norm(np.asarray(target.position) - tip)), target.name)
            for target in self._scenario.targets
            if target.kind == camera.TargetKind.OBJECT
        )

    def _nearest_object(self) -> float | None:
        objects = self._objects()
        return objects[0][0] if objects else None

    def _nearest_object_name(self) -> str | None:
        objects = self._objects()
        return objects[0][1] if objects else None

    def _step_flights(self, t: float) -> None:
        remaining = []
        for flight in self._flights:
            before = np.asarray(flight.projectile.position)
            flight.projectile = ballistics.projectile_step(flight.projectile, self._dt)
            after = np.asarray(flight.projectile.position)
            if flight.projectile.kind == payloads_model.ProjectileKind.MARKER:
                floor = np.array([0.0, 0.0, self._scenario.floor_depth])
                landed = ballistics.plane_crossing(before, after, floor, np.array([0.0, 0.0, 1.0]))
                if landed is None:
                    remaining.append(flight)
                    continue
                inside = flight.target is not None and (
                    max(abs(landed[0] - flight.target.position[0]), abs(landed[1] - flight.target.position[1]))
                    <= flight.target.size / 2.0
                )
                self._record_payload(
                    t, "marker_landed", f"marker landed at {landed[0]:.3f} {landed[1]:.3f} {'in' if inside else 'outside'} bin"
                )
                continue

            crossing = None
            if flight.target is not None:
                crossing = ballistics.plane_crossing(
                    before, after, np.asarray(flight.target.position), flight.normal
                )
            if crossing is not None:
                miss = float(np.linalg.norm(crossing - np.asarray(flight.target.position)))
                hit = miss <= flight.target.size / 2.0
                self._record_payload(
                    t,
                    "torpedo_hit" if hit else "torpedo_miss",
                    f"torpedo {'hit' if hit else 'missed'} {flight.target.name} by {miss:.3f} m",
                )
            elif after[2] <= 0.0 or t - flight.launched > TORPEDO_FLIGHT_LIMIT:
                self._record_payload(t, "torpedo_miss", "torpedo surfaced without reaching the target")
            else:
                remaining.append(flight)
        self._flights = remaining

    def _record_payload(self, t: float, event: str, description: str) -> None:
        self._tick_events.append(event)
        self._payload_events.append(f"t={t:.2f} {description}")
        logger.info("%s at t=%.2f", description, t)

    # loop -------------------------------------------------------------------

    def _thrusters_live(self) -> bool:
        kill = self._power.kill
        return not kill.hard_kill and not kill.soft_kill and any(pod.available for pod in self._power.pods)

    def _row(self, rails: power_model.RailState) -> telemetry_model.TelemetryRow:
        return telemetry_model.TelemetryRow.with_events(
            list(self._tick_events),
            t=self._state.t,
            pose=self._state.pose.as_array(),
            nu=self._state.nu.as_array(),
            thrusts=self._thrusts,
            rail_voltages=[rails[rail].voltage for rail in power_model.Rail],
            rail_currents=[rails[rail].current for rail in power_model.Rail],
            depth_reading=self._depth_reading,
        )

    def run(self) -> tuple[model.MissionReport, list[telemetry_model.TelemetryRow]]:
        sim = self._scenario.sim
        rows: list[telemetry_model.TelemetryRow] = []
        end_note = "mission time exhausted"
        logger.info("Mission start: %d tasks, seed %d", len(self._plan.tasks), sim.seed)
        for k in range(sim.steps):
            t = k * sim.dt
            self._tick_events = self._power.apply_events(t)
            powered = any(pod.available for pod in self._power.pods)
            if self._power.kill.hard_kill or not powered:
                # the computer is off: coast this last step with no thrust
                self._hard_killed = self._power.kill.hard_kill
                end_note = "hard kill" if self._hard_killed else "power lost"
                self._thrusts = np.zeros(8)
                rails = self._power.step(self._thrusts, sim.dt)
                self._state = integrator.step(
                    self._state, core_model.ThrustVector.zero(), self._scenario.params, sim.dt, sim.integrator
                )
                rows.append(self._row(rails))
                logger.warning("Mission ended at t=%.2f: %s", t, end_note)
                break

            self._publish_sensors(t)
            pose = self._navigator.update(self._bus, sim.dt)

            task = self._current
            if task is not None and not self._in_transit(task):
                target = self._targets[task.name]
                if task.kind == TaskKind.PINGER:
                    if k % self._acoustics_every == 0:
                        self._run_acoustics(target, t)
                elif task.vision and k % self._vision_every == 0:
                    self._run_vision(target, t)

            goal, request, mask = self._sequence(t, sim.dt, pose)
            nu = core_model.BodyVelocity(
                u=float(self._navigator.velocity[0]),
                v=float(self._navigator.velocity[1]),
                w=float(self._navigator.velocity[2]),
            )
            wrench = self._controller.step(goal, pose, nu, sim.dt, mask)
            thrusts, _ = allocator.allocate_array(wrench.as_array(), self._matrix, self._scenario.params.t_max)
            if not self._thrusters_live():
                thrusts = np.zeros(8)
            self._thrusts = thrusts

            extra = self._apply_payload(request, t)
            self._state = integrator.step(
                self._state,
                core_model.ThrustVector.from_array(thrusts),
                self._scenario.params,
                sim.dt,
                sim.integrator,
            )
            self._step_flights(self._state.t)
            rails = self._power.step(thrusts, sim.dt, extra)
            if self._tick_events or (k + 1) % self._telemetry_every == 0:
                rows.append(self._row(rails))
            if self._current is None:
                logger.info("All tasks finished at t=%.2f", self._state.t)
                break

        end_time = self._state.t
        while self._current is not None:
            task = self._current
            note = end_note
            if self._task_started is not None and not self._in_transit(task):
                note = f"{end_note} in {self._task_state.phase}"
            self._finish_task(task, end_time, TaskPhase.FAILED, note)

        report = model.MissionReport(
            seed=sim.seed,
            outcomes=tuple(self._outcomes),
            final_state=self._state,
            end_time=end_time,
            hard_killed=self._hard_killed,
            markers_dropped=payloads_model.MARKER_CAPACITY - self._dropper.balls_remaining,
            payload_events=tuple(self._payload_events),
        )
        return report, rows


def _resolve_targets(plan: model.MissionPlan, scenario: Scenario) -> dict[str, camera.VisualTarget]:
    """Check every task's target exists and suits the task."""
    resolved = {}
    for task in plan.tasks:
        if task.target is None:
            raise exceptions.ValidationError(f"task {task.name} names no target")
        target = scenario.target(task.target)
        if target is None:
            raise exceptions.ScenarioReferenceError(
                f"task {task.name} references unknown target {task.target!r}"
            )
        if target.kind not in task.kind.target_kinds:
            raise exceptions.ValidationError(
                f"task {task.name} ({task.kind}) cannot use {target.kind} target {target.name!r}"
            )
        resolved[task.name] = target
    return resolved


def _viewpoint(cam: camera.CameraConfig, target: camera.VisualTarget, distance: float) -> core_model.Pose:
    """Vehicle pose that puts ``target`` on the camera axis at ``distance``."""
    offset = np.asarray(cam.offset)
    position = np.asarray(target.position, dtype=float)
    if cam.mount == camera.CameraMount.DOWN:
        x, y, z = position - offset - np.array([0.0, 0.0, distance])
        return core_model.Pose(x=x, y=y, z=z)
    psi = target.heading
    c, s = math.cos(psi), math.sin(psi)
    ahead = offset + np.array([distance, 0.0, 0.0])
    x = position[0] - (c * ahead[0] - s * ahead[1])
    y = position[1] - (s * ahead[0] + c * ahead[1])
    return core_model.Pose(x=x, y=y, z=position[2] - ahead[2], psi=psi)


def run_mission(
    plan: model.MissionPlan, scenario: Scenario, **options: int
) -> tuple[model.MissionReport, list[telemetry_model.TelemetryRow]]:
    """Execute ``plan`` in ``scenario``; returns the report and the telemetry rows."""
    return MissionRunner(plan, scenario, **options).run()

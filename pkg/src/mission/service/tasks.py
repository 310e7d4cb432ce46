"""Task-handler layer: per-task SEARCH / ALIGN / ACT behaviour.

Each handler turns the latest perception into a world-frame MotionGoal for
the motion library, or into a payload request. Handlers are pure: the
executor owns the TaskState and feeds back the new one every tick.
"""

import logging
import math

import numpy as np
import pydantic

from src.acoustics.domain import model as acoustics_model
from src.control.domain import model as control_model
from src.core.domain import model as core_model
from src.mission.domain import model
from src.mission.domain.status import TaskKind, TaskPhase
from src.mission.service import navigation
from src.payloads.domain import model as payloads_model
from src.payloads.service import grabber as grabber_service
from src.vision.domain import camera as camera_model
from src.vision.domain import model as vision_model
from src.vision.service import camera as camera_service

logger = logging.getLogger(__name__)

SWEEP_AMPLITUDE = math.pi / 4.0
SWEEP_RATE = 0.1
CENTER_TOLERANCE_PX = 10.0
DEFAULT_STANDOFF = 0.5
DISTANCE_MARGIN = 0.3
LOST_AFTER = 3.0
REACHED_RADIUS = 0.25
DROP_RADIUS = 0.1
GRAB_SETTLE = 0.05
GRAB_SETTLE_TIMEOUT = 20.0
ARRIVAL_ELEVATION = math.radians(60.0)
PINGER_CARROT = 2.0
GATE_PASS_DISTANCE = 1.5
BUOY_TOUCH_DEPTH = 0.2

STANDOFF: dict[TaskKind, float] = {
    TaskKind.GATE: 2.0,
    TaskKind.BUOY: DEFAULT_STANDOFF,
    TaskKind.TORPEDO: 2.0,
    TaskKind.GRAB: 1.0,
}


class TaskContext(pydantic.BaseModel):
    """Bus snapshot and payload status handed to a task handler.

    ``detection`` and ``heading`` are only set when fresh.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    t: float
    dt: float = pydantic.Field(gt=0)
    pose: core_model.Pose
    target: camera_model.VisualTarget
    camera: camera_model.CameraConfig | None = None
    detection: vision_model.Detection | None = None
    heading: acoustics_model.AcousticHeading | None = None
    markers_left: int = 0
    torpedoes_left: int = 0
    grabber: payloads_model.GrabberState = payloads_model.GrabberState()


def sweep_offset(elapsed: float, amplitude: float = SWEEP_AMPLITUDE, rate: float = SWEEP_RATE) -> float:
    """Triangle wave in [-amplitude, amplitude] starting at 0 and rising at ``rate``."""
    travel = (rate * elapsed) % (4.0 * amplitude)
    if travel <= amplitude:
        return travel
    if travel <= 3.0 * amplitude:
        return 2.0 * amplitude - travel
    return travel - 4.0 * amplitude


def _hold(x: float, y: float, z: float, psi: float) -> control_model.MotionGoal:
    return control_model.MotionGoal(x=x, y=y, z=z, phi=0.0, theta=0.0, psi=psi)


def _anchor(pose: core_model.Pose) -> tuple[float, float, float, float]:
    return (pose.x, pose.y, pose.z, pose.psi)


def _estimate(ctx: TaskContext) -> np.ndarray | None:
    """World position of the target from the fresh detection, or None."""
    if ctx.detection is None or ctx.camera is None:
        return None
    # without a calibration the range is unknown; assume the default standoff
    depth = ctx.detection.distance if ctx.detection.distance is not None else DEFAULT_STANDOFF
    u, v = ctx.detection.center
    return camera_service.back_project(ctx.camera, ctx.pose, u, v, depth)


def _centered(ctx: TaskContext, vertical: bool) -> bool:
    if ctx.detection is None or ctx.camera is None:
        return False
    cx, cy = ctx.camera.principal_point
    u, v = ctx.detection.center
    if abs(u - cx) >= CENTER_TOLERANCE_PX:
        return False
    return not vertical or abs(v - cy) < CENTER_TOLERANCE_PX


def _approach(pose: core_model.Pose, point: np.ndarray, standoff: float) -> tuple[control_model.MotionGoal, float]:
    """Goal ``standoff`` metres short of ``point``, facing it; also returns the facing."""
    psi = model.heading_to((pose.x, pose.y), (float(point[0]), float(point[1])))
    stop = point - standoff * np.array([math.cos(psi), math.sin(psi), 0.0])
    return _hold(float(stop[0]), float(stop[1]), float(point[2]), psi), psi


def _horizontal_distance(pose: core_model.Pose, point: tuple[float, float, float]) -> float:
    return math.hypot(point[0] - pose.x, point[1] - pose.y)


def _search(task: model.Task, state: model.TaskState, ctx: TaskContext) -> tuple[model.TaskState, model.TaskAction]:
    if task.kind == TaskKind.PINGER:
        if ctx.heading is not None:
            if _arrived(ctx.heading):
                return state.mark_act(None, None), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))
            return _pinger_align(task, state.mark_align(), ctx)
    elif not task.vision:
        return state.mark_align(estimate=ctx.target.position), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))
    else:
        estimate = _estimate(ctx)
        if estimate is not None:
            return _align(task, state.mark_align(estimate=tuple(estimate)), ctx)

    if state.anchor is None:
        state = state.model_copy(update={"anchor": _anchor(ctx.pose)})
    x, y, z, psi = state.anchor
    return state, model.TaskAction(goal=_hold(x, y, z, psi + sweep_offset(state.phase_elapsed)))


def _arrived(heading: acoustics_model.AcousticHeading) -> bool:
    return heading.elevation is not None and heading.elevation >= ARRIVAL_ELEVATION


def _pinger_align(task: model.Task, state: model.TaskState, ctx: TaskContext) -> tuple[model.TaskState, model.TaskAction]:
    if ctx.heading is not None:
        if _arrived(ctx.heading):
            return state.mark_act(None, None), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))
        depth = state.anchor[2] if state.anchor is not None else ctx.pose.z
        psi = ctx.pose.psi + ctx.heading.azimuth
        carrot = navigation.target_frame_point((ctx.pose.x, ctx.pose.y, depth), psi, (PINGER_CARROT, 0.0, 0.0))
        state = state.model_copy(
            update={"anchor": (float(carrot[0]), float(carrot[1]), depth, psi), "last_seen": ctx.t}
        )
    elif state.last_seen is not None and ctx.t - state.last_seen > LOST_AFTER:
        return state.mark_search(), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))
    if state.anchor is None:
        state = state.model_copy(update={"anchor": _anchor(ctx.pose)})
    return state, model.TaskAction(goal=_hold(*state.anchor))


def _align(task: model.Task, state: model.TaskState, ctx: TaskContext) -> tuple[model.TaskState, model.TaskAction]:
    if task.kind == TaskKind.PINGER:
        return _pinger_align(task, state, ctx)

    if not task.vision:
        return _align_blind(task, state, ctx)

    estimate = _estimate(ctx)
    if estimate is not None:
        state = state.model_copy(update={"estimate": tuple(estimate), "last_seen": ctx.t})
    elif state.last_seen is None or ctx.t - state.last_seen > LOST_AFTER:
        logger.info("Task %s lost its target", task.name)
        return state.mark_search(), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))

    point = np.asarray(state.estimate)
    if task.kind == TaskKind.MARKER_DROP:
        if state.anchor is None:
            state = state.model_copy(update={"anchor": _anchor(ctx.pose)})
        depth, psi = state.anchor[2], state.anchor[3]
        goal = _hold(float(point[0]), float(point[1]), depth, psi)
        if estimate is not None and _centered(ctx, vertical=True):
            act_goal = (float(point[0]), float(point[1]), depth)
            return state.mark_act(act_goal, psi), model.TaskAction(goal=goal)
        return state, model.TaskAction(goal=goal)

    standoff = STANDOFF[task.kind]
    goal, psi = _approach(ctx.pose, point, standoff)
    distance = ctx.detection.distance if ctx.detection is not None else None
    close = distance is not None and distance < standoff + DISTANCE_MARGIN
    if estimate is not None and close and _centered(ctx, vertical=task.kind == TaskKind.TORPEDO):
        return _enter_act(task, state, ctx, point, psi)
    return state, model.TaskAction(goal=goal)


def _align_blind(task: model.Task, state: model.TaskState, ctx: TaskContext) -> tuple[model.TaskState, model.TaskAction]:
    """Drive to a standoff point in the target's own frame using the mapped position."""
    point = np.asarray(ctx.target.position, dtype=float)
    if task.kind == TaskKind.MARKER_DROP:
        if state.anchor is None:
            state = state.model_copy(update={"anchor": _anchor(ctx.pose)})
        depth, psi = state.anchor[2], state.anchor[3]
        act_goal = (float(point[0]), float(point[1]), depth)
        return state.mark_act(act_goal, psi), model.TaskAction(goal=_hold(*act_goal, psi))

    standoff = STANDOFF[task.kind]
    if state.act_heading is None:
        psi = model.heading_to((ctx.pose.x, ctx.pose.y), (float(point[0]), float(point[1])))
        state = state.model_copy(update={"act_heading": psi})
    psi = state.act_heading
    stop = navigation.target_frame_point(tuple(point), psi, (-standoff, 0.0, 0.0))
    goal = _hold(float(stop[0]), float(stop[1]), float(stop[2]), psi)
    if _horizontal_distance(ctx.pose, tuple(stop)) < REACHED_RADIUS and abs(ctx.pose.z - stop[2]) < REACHED_RADIUS:
        return _enter_act(task, state, ctx, point, psi)
    return state, model.TaskAction(goal=goal)


def _enter_act(
    task: model.Task, state: model.TaskState, ctx: TaskContext, point: np.ndarray, psi: float
) -> tuple[model.TaskState, model.TaskAction]:
    match task.kind:
        case TaskKind.GATE:
            through = navigation.target_frame_point(tuple(point), psi, (GATE_PASS_DISTANCE, 0.0, 0.0))
        case TaskKind.BUOY:
            through = navigation.target_frame_point(tuple(point), psi, (BUOY_TOUCH_DEPTH, 0.0, 0.0))
        case TaskKind.GRAB:
            reach = grabber_service.GRABBER_OFFSET[2] + payloads_model.GRABBER_MAX_EXTENSION
            through = point - np.array([0.0, 0.0, reach])
        case _:
            through = np.array([ctx.pose.x, ctx.pose.y, ctx.pose.z])
    act_goal = (float(through[0]), float(through[1]), float(through[2]))
    return state.mark_act(act_goal, psi), model.TaskAction(goal=_hold(*act_goal, psi))


def _act(task: model.Task, state: model.TaskState, ctx: TaskContext) -> tuple[model.TaskState, model.TaskAction]:
    if task.kind == TaskKind.PINGER:
        return state.mark_done("arrived over pinger"), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))

    x, y, z = state.act_goal
    psi = state.act_heading if state.act_heading is not None else ctx.pose.psi
    goal = _hold(x, y, z, psi)
    match task.kind:
        case TaskKind.GATE | TaskKind.BUOY:
            if _horizontal_distance(ctx.pose, state.act_goal) < REACHED_RADIUS:
                note = "passed gate" if task.kind == TaskKind.GATE else "touched buoy"
                return state.mark_done(note), model.TaskAction(goal=goal)
            return state, model.TaskAction(goal=goal)
        case TaskKind.MARKER_DROP:
            if state.stage == 0:
                if ctx.markers_left == 0:
                    return state.mark_failed("dropper empty"), model.TaskAction(goal=goal)
                if _horizontal_distance(ctx.pose, state.act_goal) < DROP_RADIUS:
                    request = model.PayloadRequest(kind=model.PayloadKind.DROP)
                    return state.with_stage(1), model.TaskAction(goal=goal, payload=request)
                return state, model.TaskAction(goal=goal)
            return state.mark_done("marker dropped"), model.TaskAction(goal=goal)
        case TaskKind.TORPEDO:
            if state.stage == 0:
                if ctx.torpedoes_left == 0:
                    return state.mark_failed("launcher empty"), model.TaskAction(goal=goal)
                request = model.PayloadRequest(kind=model.PayloadKind.LAUNCH)
                return state.with_stage(1), model.TaskAction(goal=goal, payload=request)
            return state.mark_done("torpedo launched"), model.TaskAction(goal=goal)
        case _:
            return _grab(state, ctx, goal)


def _grab(
    state: model.TaskState, ctx: TaskContext, goal: control_model.MotionGoal
) -> tuple[model.TaskState, model.TaskAction]:
    grabber = ctx.grabber
    match state.stage:
        case 0:
            settled = (
                _horizontal_distance(ctx.pose, state.act_goal) < GRAB_SETTLE
                and abs(ctx.pose.z - state.act_goal[2]) < GRAB_SETTLE
            )
            if settled or state.phase_elapsed > GRAB_SETTLE_TIMEOUT:
                return state.with_stage(1), model.TaskAction(goal=goal, payload=_grabber(payloads_model.GrabberAction.EXTEND))
        case 1:
            if not grabber.busy and grabber.lift_extension == payloads_model.GRABBER_MAX_EXTENSION:
                return state.with_stage(2), model.TaskAction(goal=goal, payload=_grabber(payloads_model.GrabberAction.CLOSE))
        case 2:
            if not grabber.busy:
                return state.with_stage(3), model.TaskAction(goal=goal, payload=_grabber(payloads_model.GrabberAction.RETRACT))
        case _:
            if not grabber.busy:
                if grabber.holding:
                    return state.mark_done("object grabbed"), model.TaskAction(goal=goal)
                return state.mark_failed("missed object"), model.TaskAction(goal=goal)
    return state, model.TaskAction(goal=goal)


def _grabber(action: payloads_model.GrabberAction) -> model.PayloadRequest:
    return model.PayloadRequest(
        kind=model.PayloadKind.GRABBER, grabber=payloads_model.GrabberCommand(action=action)
    )


def task_step(
    task: model.Task, state: model.TaskState, ctx: TaskContext
) -> tuple[model.TaskState, model.TaskAction]:
    """Advance one task handler by one tick."""
    if state.phase.is_terminal:
        return state, model.TaskAction()
    state = state.advanced(ctx.dt)
    if state.elapsed > task.timeout:
        logger.info("Task %s timed out in %s", task.name, state.phase)
        return state.mark_failed(f"timeout in {state.phase}"), model.TaskAction(goal=_hold(*_anchor(ctx.pose)))

    match state.phase:
        case TaskPhase.SEARCH:
            return _search(task, state, ctx)
        case TaskPhase.ALIGN:
            return _align(task, state, ctx)
        case _:
            return _act(task, state, ctx)

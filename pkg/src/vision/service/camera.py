"""Project world targets into the vehicle's cameras and render frames."""

from collections.abc import Iterable

import numpy as np

from src.core.domain import model as core_model
from src.core.service import kinematics
from src.vision.domain import camera, model
from src.vision.service import render


def to_camera(
    cam: camera.CameraConfig, pose: core_model.Pose, point: np.ndarray
) -> tuple[float, float, float] | None:
    """Pixel (u, v) and depth of a world point, or None behind the near plane."""
    body = kinematics.world_to_body(pose, np.asarray(point) - pose.position) - np.asarray(cam.offset)
    if cam.mount == camera.CameraMount.FORWARD:
        depth, right, down = body[0], body[1], body[2]
    else:
        depth, right, down = body[2], body[1], -body[0]
    if depth < cam.min_depth:
        return None
    cx, cy = cam.principal_point
    f = cam.focal
    return (cx + f * right / depth, cy + f * down / depth, float(depth))


def back_project(
    cam: camera.CameraConfig, pose: core_model.Pose, u: float, v: float, depth: float
) -> np.ndarray:
    """World point seen at pixel (u, v) at the given depth; inverse of to_camera."""
    cx, cy = cam.principal_point
    right = (u - cx) * depth / cam.focal
    down = (v - cy) * depth / cam.focal
    if cam.mount == camera.CameraMount.FORWARD:
        body = np.array([depth, right, down])
    else:
        body = np.array([-down, right, depth])
    return pose.position + kinematics.body_to_world(pose, body + np.asarray(cam.offset))


def _gate_posts(target: camera.VisualTarget) -> list[np.ndarray]:
    centre = np.asarray(target.position)
    across = np.array([-np.sin(target.heading), np.cos(target.heading), 0.0])
    return [centre - across * target.size / 2.0, centre + across * target.size / 2.0]


def project_target(
    cam: camera.CameraConfig, pose: core_model.Pose, target: camera.VisualTarget
) -> tuple[float, list[model.DiskShape | model.RectShape]]:
    """Depth and image-plane shapes of one target; empty when out of view."""
    if target.kind.camera != cam.mount:
        return 0.0, []
    f = cam.focal
    if target.kind in (camera.TargetKind.BUOY, camera.TargetKind.OBJECT):
        projected = to_camera(cam, pose, np.asarray(target.position))
        if projected is None:
            return 0.0, []
        u, v, depth = projected
        return depth, [
            model.DiskShape(cx=u, cy=v, radius=f * target.size / 2.0 / depth, color=target.color)
        ]

    if target.kind == camera.TargetKind.GATE:
        shapes: list[model.DiskShape | model.RectShape] = []
        depths = []
        for post in _gate_posts(target):
            projected = to_camera(cam, pose, post)
            if projected is None:
                continue
            u, v, depth = projected
            half_w = max(f * target.post_width / 2.0 / depth, 0.5)
            half_h = f * target.height / 2.0 / depth
            shapes.append(
                model.RectShape(x0=u - half_w, y0=v - half_h, x1=u + half_w, y1=v + half_h, color=target.color)
            )
            depths.append(depth)
        return (min(depths) if depths else 0.0), shapes

    # bin: a square on the floor seen from above
    half = target.size / 2.0
    corners = [
        np.asarray(target.position) + np.array([dx, dy, 0.0])
        for dx in (-half, half)
        for dy in (-half, half)
    ]
    projected_corners = [to_camera(cam, pose, corner) for corner in corners]
    if any(p is None for p in projected_corners):
        return 0.0, []
    us = [p[0] for p in projected_corners if p is not None]
    vs = [p[1] for p in projected_corners if p is not None]
    depth = float(np.mean([p[2] for p in projected_corners if p is not None]))
    return depth, [model.RectShape(x0=min(us), y0=min(vs), x1=max(us), y1=max(vs), color=target.color)]


def _on_canvas(shape: model.DiskShape | model.RectShape, width: int, height: int) -> bool:
    if isinstance(shape, model.DiskShape):
        x0, y0 = shape.cx - shape.radius, shape.cy - shape.radius
        x1, y1 = shape.cx + shape.radius, shape.cy + shape.radius
    else:
        x0, y0, x1, y1 = shape.x0, shape.y0, shape.x1, shape.y1
    return x1 >= 0 and y1 >= 0 and x0 <= width - 1 and y0 <= height - 1


def render_view(
    cam: camera.CameraConfig,
    pose: core_model.Pose,
    targets: Iterable[camera.VisualTarget],
    background: model.Color = (40.0, 110.0, 130.0),
) -> model.Image:
    """Render visible targets far to near over a flat water background."""
    layers = []
    for target in targets:
        depth, shapes = project_target(cam, pose, target)
        visible = [s for s in shapes if _on_canvas(s, cam.width, cam.height)]
        if visible:
            layers.append((depth, target.name, visible))
    layers.sort(key=lambda layer: (-layer[0], layer[1]))
    scene = model.SceneSpec(
        width=cam.width,
        height=cam.height,
        background=background,
        shapes=tuple(shape for _, _, shapes in layers for shape in shapes),
    )
    return render.render_scene(scene, allow_partial=True)

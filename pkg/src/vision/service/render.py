"""Rasterise synthetic scenes without anti-aliasing."""

import numpy as np

from src import exceptions
from src.vision.domain import model


def _check_inside(scene: model.SceneSpec, x0: float, y0: float, x1: float, y1: float) -> None:
    if x0 < 0 or y0 < 0 or x1 > scene.width - 1 or y1 > scene.height - 1:
        raise exceptions.GeometryError(
            f"shape extent ({x0:g}, {y0:g})-({x1:g}, {y1:g}) leaves the "
            f"{scene.width}x{scene.height} canvas"
        )


def _disk(canvas: np.ndarray, shape: model.DiskShape, xs: np.ndarray, ys: np.ndarray) -> None:
    mask = (xs - shape.cx) ** 2 + (ys - shape.cy) ** 2 <= shape.radius**2
    canvas[mask] = shape.color


def _rect(canvas: np.ndarray, shape: model.RectShape, xs: np.ndarray, ys: np.ndarray) -> None:
    mask = (xs >= shape.x0) & (xs <= shape.x1) & (ys >= shape.y0) & (ys <= shape.y1)
    canvas[mask] = shape.color


def render_scene(scene: model.SceneSpec, allow_partial: bool = False) -> model.Image:
    """Draw shapes over the background in order, later shapes on top.

    Shapes must fit the canvas unless ``allow_partial`` is set, in which
    case they are clipped.
    """
    canvas = np.empty((scene.height, scene.width, 3), dtype=float)
    canvas[:] = scene.background
    ys, xs = np.mgrid[0 : scene.height, 0 : scene.width]

    for shape in scene.shapes:
        parts: tuple[model.DiskShape | model.RectShape, ...]
        parts = shape.posts() if isinstance(shape, model.GateShape) else (shape,)
        for part in parts:
            if isinstance(part, model.DiskShape):
                if not allow_partial:
                    _check_inside(
                        scene,
                        part.cx - part.radius,
                        part.cy - part.radius,
                        part.cx + part.radius,
                        part.cy + part.radius,
                    )
                _disk(canvas, part, xs, ys)
            else:
                if not allow_partial:
                    _check_inside(scene, part.x0, part.y0, part.x1, part.y1)
                _rect(canvas, part, xs, ys)

    return model.Image(data=np.rint(canvas).astype(np.uint8))

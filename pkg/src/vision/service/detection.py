"""Threshold, morphology and connected-component blob detection."""

import logging
import math

import numpy as np
import scipy.ndimage
import skimage.color
import skimage.feature
import skimage.transform

from src.vision.domain import model

logger = logging.getLogger(__name__)

_FOUR_CONNECTED = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


def threshold(image: model.Image, cfg: model.DetectConfig) -> np.ndarray:
    """Binary mask of pixels inside the HSV ranges."""
    if image.channels == 1:
        value = image.data.astype(float) / 255.0
        return (value >= cfg.v_min) & (value <= cfg.v_max)
    hsv = skimage.color.rgb2hsv(image.data)
    hue = hsv[:, :, 0] * 360.0
    saturation, value = hsv[:, :, 1], hsv[:, :, 2]
    if cfg.h_min <= cfg.h_max:
        hue_ok = (hue >= cfg.h_min) & (hue <= cfg.h_max)
    else:
        hue_ok = (hue >= cfg.h_min) | (hue <= cfg.h_max)
    return (
        hue_ok
        & (saturation >= cfg.s_min)
        & (saturation <= cfg.s_max)
        & (value >= cfg.v_min)
        & (value <= cfg.v_max)
    )


def close_mask(mask: np.ndarray, kernel: int, iterations: int) -> np.ndarray:
    """Dilate then erode with a square kernel; padded so borders are not eroded."""
    if iterations == 0 or kernel == 1:
        return mask
    pad = kernel * iterations
    padded = np.pad(mask, pad, mode="constant", constant_values=False)
    closed = scipy.ndimage.binary_closing(
        padded, structure=np.ones((kernel, kernel), dtype=bool), iterations=iterations
    )
    return closed[pad:-pad, pad:-pad]


def _select(mask: np.ndarray, cfg: model.DetectConfig) -> np.ndarray | None:
    labels, count = scipy.ndimage.label(mask, structure=_FOUR_CONNECTED)
    if count == 0:
        return None
    areas = np.bincount(labels.ravel())[1:]
    # stable sort keeps the lowest label first among equal areas
    order = np.argsort(-areas, kind="stable")
    chosen = [int(i) + 1 for i in order[: cfg.components] if areas[i] >= cfg.min_area]
    if len(chosen) < cfg.components:
        return None
    return np.isin(labels, chosen)


def _blob_dim(width: int, height: int, kind: model.BlobDimension) -> float:
    match kind:
        case model.BlobDimension.WIDTH:
            return float(width)
        case model.BlobDimension.HEIGHT:
            return float(height)
        case model.BlobDimension.DIAGONAL:
            return math.hypot(width, height)
        case _:
            return float(max(width, height))


def _contour(component: np.ndarray) -> np.ndarray:
    eroded = scipy.ndimage.binary_erosion(component, structure=_FOUR_CONNECTED, border_value=0)
    return component & ~eroded


def _center(
    component: np.ndarray, bbox: tuple[int, int, int, int], method: model.CenterMethod
) -> tuple[float, float]:
    x0, y0, x1, y1 = bbox
    match method:
        case model.CenterMethod.ELLIPSE:
            # the moment-equivalent ellipse is centred on the area centroid
            ys, xs = np.nonzero(component)
        case model.CenterMethod.WEIGHTED:
            ys, xs = np.nonzero(_contour(component))
        case _:
            return ((x0 + x1) / 2.0, (y0 + y1) / 2.0)
    return (float(xs.mean()), float(ys.mean()))


def hough_segments(component: np.ndarray, blob_dim: float) -> list[model.Segment]:
    """Canny edges of the component, then the probabilistic Hough transform."""
    edges = skimage.feature.canny(component.astype(float), sigma=1.0)
    if not edges.any():
        return []
    segments = skimage.transform.probabilistic_hough_line(
        edges,
        threshold=10,
        line_length=max(5, int(blob_dim // 4)),
        line_gap=3,
        rng=0,
    )
    return [((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))) for a, b in segments]


# |sin| of the angle between two lines below which they count as parallel
PARALLEL_SINE = 0.2


def _midpoint_center(segments: list[model.Segment]) -> tuple[float, float]:
    mids = np.array([[(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0] for a, b in segments])
    lengths = np.array([math.dist(a, b) for a, b in segments])
    if lengths.sum() == 0:
        return (float(mids[:, 0].mean()), float(mids[:, 1].mean()))
    centre = (mids * lengths[:, None]).sum(axis=0) / lengths.sum()
    return (float(centre[0]), float(centre[1]))


def segments_center(segments: list[model.Segment], width: int, height: int) -> tuple[float, float]:
    """Mean of the pairwise line intersections inside the image.

    Each intersection is weighted by the product of the two segment lengths.
    Falls back to the length-weighted midpoint when no pair crosses in frame.
    """
    points, weights = [], []
    for i, (a0, a1) in enumerate(segments):
        da = np.subtract(a1, a0, dtype=float)
        for b0, b1 in segments[i + 1 :]:
            db = np.subtract(b1, b0, dtype=float)
            length = np.linalg.norm(da) * np.linalg.norm(db)
            cross = da[0] * db[1] - da[1] * db[0]
            if length == 0 or abs(cross) < PARALLEL_SINE * length:
                continue
            offset = np.subtract(b0, a0, dtype=float)
            s = (offset[0] * db[1] - offset[1] * db[0]) / cross
            point = np.asarray(a0, dtype=float) + s * da
            if 0.0 <= point[0] <= width - 1 and 0.0 <= point[1] <= height - 1:
                points.append(point)
                weights.append(length)
    if not points:
        return _midpoint_center(segments)
    centre = np.average(np.array(points), axis=0, weights=weights)
    return (float(centre[0]), float(centre[1]))


def detect(image: model.Image, cfg: model.DetectConfig) -> model.Detection | None:
    """Largest blob (or two largest, for gates) inside the threshold ranges.

    Returns None when no component reaches ``min_area``.
    """
    mask = close_mask(threshold(image, cfg), cfg.kernel, cfg.iterations)
    component = _select(mask, cfg)
    if component is None:
        return None

    ys, xs = np.nonzero(component)
    bbox = (int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))
    width, height = bbox[2] - bbox[0] + 1, bbox[3] - bbox[1] + 1
    blob_dim = _blob_dim(width, height, cfg.blob_dim)

    lines = None
    if cfg.mode == model.DetectionMode.HOUGH:
        segments = hough_segments(component, blob_dim)
        lines = tuple(segments)
        center = (
            segments_center(segments, image.width, image.height)
            if segments
            else _center(component, bbox, model.CenterMethod.BOX)
        )
    else:
        center = _center(component, bbox, cfg.center_method)

    center = (
        min(max(center[0], 0.0), image.width - 1.0),
        min(max(center[1], 0.0), image.height - 1.0),
    )
    return model.Detection(
        center=center, blob_dim=blob_dim, area=int(xs.size), bbox=bbox, lines=lines
    )


def config_for_color(
    color: model.Color, hue_tolerance: float = 20.0, base: model.DetectConfig | None = None
) -> model.DetectConfig:
    """Threshold config whose hue window is centred on ``color``."""
    pixel = np.asarray(color, dtype=float).reshape(1, 1, 3) / 255.0
    hue = float(skimage.color.rgb2hsv(pixel)[0, 0, 0]) * 360.0
    return (base or model.DetectConfig()).model_copy(
        update={
            "h_min": (hue - hue_tolerance) % 360.0,
            "h_max": (hue + hue_tolerance) % 360.0,
        }
    )

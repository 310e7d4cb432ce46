"""Underwater degradation model and the blue-filter enhancement stages."""

import logging

import numpy as np

from src import exceptions
from src.vision.domain import model

logger = logging.getLogger(__name__)

# BT.601 luma weights
_LUMA = np.array([0.299, 0.587, 0.114])


def degrade(image: model.Image, cfg: model.DegradeConfig) -> model.Image:
    """out = in * exp(-beta d) + backlight * (1 - exp(-beta d)) per channel.

    Grayscale images use the first channel's coefficients.
    """
    transmission = np.exp(-np.asarray(cfg.beta) * cfg.distance)
    backlight = np.asarray(cfg.backlight)
    if image.channels == 1:
        transmission, backlight = transmission[0], backlight[0]
    out = image.data.astype(float) * transmission + backlight * (1.0 - transmission)
    return model.Image(data=np.clip(np.rint(out), 0, 255).astype(np.uint8))


def _stretch_channel(channel: np.ndarray, discard_ratio: float) -> np.ndarray:
    counts = np.bincount(channel.ravel(), minlength=256)
    cdf = np.cumsum(counts)
    total = int(cdf[-1])
    discard = int(np.floor(discard_ratio * total))
    # low = sorted[discard], high = sorted[total - 1 - discard]
    low = int(np.searchsorted(cdf, discard, side="right"))
    high = int(np.searchsorted(cdf, total - 1 - discard, side="right"))
    if high <= low:
        return channel
    stretched = (channel.astype(float) - low) * (255.0 / (high - low))
    return np.clip(np.rint(stretched), 0, 255).astype(np.uint8)


def white_balance(image: model.Image, discard_ratio: float = 0.005) -> model.Image:
    """Per-channel linear stretch of the [low, high] cut range onto [0, 255].

    At most ``discard_ratio`` of the pixels fall below the low cut and at most
    that many above the high cut. A channel whose cuts coincide is returned
    unchanged.
    """
    if not 0.0 <= discard_ratio < 0.5:
        raise exceptions.ValidationError(f"discard ratio must be in [0, 0.5), got {discard_ratio}")
    if image.channels == 1:
        return model.Image(data=_stretch_channel(image.data, discard_ratio))
    channels = [_stretch_channel(image.data[:, :, c], discard_ratio) for c in range(3)]
    return model.Image(data=np.stack(channels, axis=2))


def _edges(length: int, tiles: int) -> np.ndarray:
    return np.rint(np.linspace(0, length, tiles + 1)).astype(int)


def tile_lut(tile: np.ndarray, clip_limit: float) -> np.ndarray:
    """Clipped-histogram equalisation mapping for one tile, as floats in [0, 255]."""
    counts = np.bincount(tile.ravel(), minlength=256).astype(float)
    total = float(tile.size)
    if np.count_nonzero(counts) <= 1:
        return np.arange(256, dtype=float)
    limit = clip_limit * total / 256.0
    excess = float(np.sum(np.maximum(counts - limit, 0.0)))
    clipped = np.minimum(counts, limit) + excess / 256.0
    return 255.0 * np.cumsum(clipped) / total


def _interp_axis(length: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Lower tile index, upper tile index and weight for every pixel along one axis."""
    tiles = edges.size - 1
    centres = (edges[:-1] + edges[1:] - 1) / 2.0
    position = np.interp(np.arange(length), centres, np.arange(tiles, dtype=float))
    lower = np.minimum(np.floor(position).astype(int), max(tiles - 2, 0))
    upper = np.minimum(lower + 1, tiles - 1)
    weight = position - lower
    if tiles == 1:
        weight = np.zeros(length)
    return lower, upper, weight


def _clahe_gray(gray: np.ndarray, clip_limit: float, tiles: tuple[int, int]) -> np.ndarray:
    tiles_x, tiles_y = tiles
    height, width = gray.shape
    if tiles_x > width or tiles_y > height:
        raise exceptions.ValidationError(
            f"{tiles_x}x{tiles_y} tiles do not fit a {width}x{height} image"
        )
    row_edges, col_edges = _edges(height, tiles_y), _edges(width, tiles_x)
    luts = np.empty((tiles_y, tiles_x, 256))
    for i in range(tiles_y):
        for j in range(tiles_x):
            tile = gray[row_edges[i] : row_edges[i + 1], col_edges[j] : col_edges[j + 1]]
            luts[i, j] = tile_lut(tile, clip_limit)

    r0, r1, wy = _interp_axis(height, row_edges)
    c0, c1, wx = _interp_axis(width, col_edges)
    r0, r1, wy = r0[:, None], r1[:, None], wy[:, None]
    c0, c1, wx = c0[None, :], c1[None, :], wx[None, :]
    value = (
        (1 - wy) * (1 - wx) * luts[r0, c0, gray]
        + (1 - wy) * wx * luts[r0, c1, gray]
        + wy * (1 - wx) * luts[r1, c0, gray]
        + wy * wx * luts[r1, c1, gray]
    )
    return np.clip(np.rint(value), 0, 255).astype(np.uint8)


def luminance(image: model.Image) -> np.ndarray:
    if image.channels == 1:
        return image.data
    return np.clip(np.rint(image.data.astype(float) @ _LUMA), 0, 255).astype(np.uint8)


def clahe(
    image: model.Image, clip_limit: float = 2.0, tiles: tuple[int, int] = (8, 8)
) -> model.Image:
    """Contrast-limited adaptive histogram equalisation.

    Colour images are equalised on luma; the luma change is added to every
    channel so the chroma differences B-Y and R-Y are preserved.
    """
    if clip_limit < 1.0:
        raise exceptions.ValidationError(f"clip limit must be at least 1, got {clip_limit}")
    if tiles[0] < 1 or tiles[1] < 1:
        raise exceptions.ValidationError(f"tile grid must be at least 1x1, got {tiles}")
    if image.channels == 1:
        return model.Image(data=_clahe_gray(image.data, clip_limit, tiles))
    luma = luminance(image)
    delta = _clahe_gray(luma, clip_limit, tiles).astype(int) - luma.astype(int)
    out = image.data.astype(int) + delta[:, :, None]
    return model.Image(data=np.clip(out, 0, 255).astype(np.uint8))


def blue_filter(
    image: model.Image,
    discard_ratio: float = 0.005,
    clip_limit: float = 2.0,
    tiles: tuple[int, int] = (8, 8),
) -> model.Image:
    """White balance followed by CLAHE."""
    return clahe(white_balance(image, discard_ratio), clip_limit, tiles)

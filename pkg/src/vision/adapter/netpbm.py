"""Binary PGM (P5) and PPM (P6) files, 8-bit only."""

import pathlib
import re

import numpy as np

from src import exceptions
from src.vision.domain import model

_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def decode(payload: bytes, source: str = "<image>") -> model.Image:
    tokens: list[bytes] = []
    position = 0
    while len(tokens) < 4:
        match = _TOKEN.match(payload, position)
        if match is None:
            raise exceptions.ValidationError(f"{source}: truncated netpbm header")
        tokens.append(match.group(1))
        position = match.end()
    magic, width_raw, height_raw, maxval_raw = tokens
    if magic not in (b"P5", b"P6"):
        raise exceptions.ValidationError(f"{source}: unsupported netpbm type {magic!r}")
    try:
        width, height, maxval = int(width_raw), int(height_raw), int(maxval_raw)
    except ValueError as exc:
        raise exceptions.ValidationError(f"{source}: malformed netpbm header") from exc
    if maxval != 255:
        raise exceptions.ValidationError(f"{source}: only 8-bit images are supported")

    # exactly one whitespace byte separates the header from the raster
    raster = payload[position + 1 :]
    channels = 3 if magic == b"P6" else 1
    expected = width * height * channels
    if len(raster) < expected:
        raise exceptions.ValidationError(
            f"{source}: expected {expected} raster bytes, found {len(raster)}"
        )
    data = np.frombuffer(raster[:expected], dtype=np.uint8)
    shape = (height, width, 3) if channels == 3 else (height, width)
    return model.Image(data=data.reshape(shape))


def encode(image: model.Image) -> bytes:
    magic = "P6" if image.channels == 3 else "P5"
    header = f"{magic}\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.data.tobytes()


def read_image(path: pathlib.Path) -> model.Image:
    if not path.is_file():
        raise exceptions.NotFoundError(f"Image not found: {path}")
    return decode(path.read_bytes(), source=str(path))


def write_image(path: pathlib.Path, image: model.Image) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode(image))

"""Common type definitions."""

import math
from collections.abc import Sequence
from typing import Annotated, Any

import numpy as np
import pydantic


def _as_float_tuple(length: int):
    def convert(value: Any) -> tuple[float, ...]:
        if isinstance(value, str):
            value = [part for part in value.split(",") if part.strip()]
        items = tuple(float(v) for v in np.asarray(value, dtype=float).ravel())
        if len(items) != length:
            raise ValueError(f"expected {length} components, got {len(items)}")
        if not all(math.isfinite(v) for v in items):
            raise ValueError("components must be finite")
        return items

    return convert


# Fixed-length float vectors accept lists, numpy arrays or "a, b, c" strings
Vector3 = Annotated[
    tuple[float, float, float],
    pydantic.BeforeValidator(_as_float_tuple(3)),
]

Vector4 = Annotated[
    tuple[float, float, float, float],
    pydantic.BeforeValidator(_as_float_tuple(4)),
]

Vector6 = Annotated[
    tuple[float, float, float, float, float, float],
    pydantic.BeforeValidator(_as_float_tuple(6)),
]

Vector8 = Annotated[
    tuple[float, float, float, float, float, float, float, float],
    pydantic.BeforeValidator(_as_float_tuple(8)),
]


def format_vector(values: Sequence[float]) -> str:
    """Render a vector the way structured-text files store it."""
    return ", ".join(repr(float(v)) for v in values)

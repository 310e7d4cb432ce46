"""Allocation command schemas."""

import pydantic

from src.common import types as common_types


class AllocateWrench(pydantic.BaseModel):
    """Command to split a body wrench across the eight thrusters."""

    tau: common_types.Vector6
    params_path: str | None = None

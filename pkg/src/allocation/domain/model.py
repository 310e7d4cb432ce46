"""Thruster allocation matrix."""

import functools
from typing import Self

import numpy as np
import pydantic

from src import exceptions
from src.core.domain import model as core_model

THRUSTER_COUNT = 8


class AllocationMatrix(pydantic.BaseModel):
    """6x8 map from thruster forces T1..T8 to the body wrench.

    Rows are tau_x, tau_y, tau_z, tau_phi, tau_theta, tau_psi. Thrusters 1, 2
    push in surge, 3, 4 in sway and 5 to 8 in heave.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    l1: float
    l2: float
    l3: float
    l4: float

    @classmethod
    def from_params(cls, params: core_model.VehicleParams) -> Self:
        return cls(l1=params.l1, l2=params.l2, l3=params.l3, l4=params.l4)

    @property
    def is_full_rank(self) -> bool:
        return min(self.l1, self.l2, self.l3, self.l4) > 0

    def require_full_rank(self) -> None:
        if not self.is_full_rank:
            raise exceptions.RankDeficiencyError(
                "lever arms must be positive for a full-rank allocation matrix, got "
                f"l1={self.l1}, l2={self.l2}, l3={self.l3}, l4={self.l4}"
            )

    @functools.cached_property
    def b(self) -> np.ndarray:
        l1, l2, l3, l4 = self.l1, self.l2, self.l3, self.l4
        matrix = np.array(
            [
                [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0],
                [0.0, 0.0, 0.0, 0.0, l1, l1, -l1, -l1],
                [0.0, 0.0, 0.0, 0.0, -l2, l2, -l2, l2],
                [-l3, l3, l4, -l4, 0.0, 0.0, 0.0, 0.0],
            ]
        )
        matrix.setflags(write=False)
        return matrix


class Allocation(pydantic.BaseModel):
    """Saturated thrust vector and the uniform wrench scale that produced it."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    thrusts: core_model.ThrustVector
    scale: float = pydantic.Field(gt=0, le=1)

    @property
    def saturated(self) -> bool:
        return self.scale < 1.0

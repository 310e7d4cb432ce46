"""Allocation response schemas."""

from typing import Self

import pydantic

from src.allocation.domain import model


class ThrustAllocation(pydantic.BaseModel):
    """Thrusts T1..T8 with the applied wrench scale."""

    thrusts: tuple[float, ...]
    scale: float

    @classmethod
    def from_entity(cls, allocation: model.Allocation) -> Self:
        return cls(thrusts=allocation.thrusts.t, scale=allocation.scale)

    def render(self) -> str:
        """Space-separated thrusts, rounded to 9 decimals, with -0 folded to 0."""
        return " ".join(f"{(round(t, 9) + 0.0):g}" for t in self.thrusts)

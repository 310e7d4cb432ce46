"""Dynamics state."""

from typing import Self

import pydantic

from src.core.domain import model as core_model


class VehicleState(pydantic.BaseModel):
    """Joint pose, body velocity and simulation time."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    pose: core_model.Pose = core_model.Pose()
    nu: core_model.BodyVelocity = core_model.BodyVelocity()
    t: float = pydantic.Field(default=0.0, ge=0)

    @classmethod
    def at_rest(cls, pose: core_model.Pose | None = None) -> Self:
        return cls(pose=pose or core_model.Pose(), nu=core_model.BodyVelocity(), t=0.0)

    def kinetic_energy(self, params: core_model.VehicleParams) -> float:
        """0.5 * nu^T M nu for the diagonal rigid-body mass matrix."""
        nu = self.nu.as_array()
        return float(0.5 * params.mass_matrix_diagonal() @ (nu * nu))

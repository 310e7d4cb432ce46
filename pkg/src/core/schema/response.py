"""Vehicle parameter response schemas."""

from typing import Self

import pydantic

from src.core.adapter import params_file
from src.core.domain import model


class ParamsListing(pydantic.BaseModel):
    """The parameters in file form plus the derived hydrostatic figures."""

    text: str
    total_mass: float
    weight: float
    buoyancy: float

    @classmethod
    def from_entity(cls, params: model.VehicleParams) -> Self:
        return cls(
            text=params_file.dump_params(params),
            total_mass=params.total_mass,
            weight=params.weight,
            buoyancy=params.buoyancy,
        )

    @property
    def net_heave(self) -> float:
        """Buoyancy minus weight; positive means the vehicle floats up."""
        return self.buoyancy - self.weight

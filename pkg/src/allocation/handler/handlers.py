"""Allocation command handlers."""

from src.allocation.domain import model
from src.allocation.schema import command, response
from src.allocation.service import allocator
from src.core.adapter import params_file
from src.core.domain import model as core_model


class AllocateWrenchHandler:
    """Handle a one-off wrench allocation."""

    def __init__(self, params_reader: params_file.ParamsFileReader) -> None:
        self._params_reader = params_reader

    async def handle(self, cmd: command.AllocateWrench) -> response.ThrustAllocation:
        """Allocate the wrench with the loaded vehicle's lever arms and thrust limit."""
        params = self._params_reader.load(cmd.params_path)
        matrix = model.AllocationMatrix.from_params(params)
        tau = core_model.GeneralizedForce.from_array(cmd.tau)
        return response.ThrustAllocation.from_entity(
            allocator.allocate(tau, matrix, params.t_max)
        )

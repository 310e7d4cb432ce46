"""Vehicle parameter command handlers."""

from src.core.adapter import params_file
from src.core.schema import command, response


class ShowParamsHandler:
    def __init__(self, params_reader: params_file.ParamsFileReader) -> None:
        self._params_reader = params_reader

    async def handle(self, cmd: command.ShowParams) -> response.ParamsListing:
        return response.ParamsListing.from_entity(self._params_reader.load(cmd.params_path))

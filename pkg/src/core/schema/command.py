"""Vehicle parameter command schemas."""

import pydantic


class ShowParams(pydantic.BaseModel):
    """Command to load and echo a vehicle parameter file (defaults when absent)."""

    params_path: str | None = None

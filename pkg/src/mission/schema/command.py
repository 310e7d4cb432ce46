"""Mission command schemas."""

import pydantic


class RunMission(pydantic.BaseModel):
    """Command to run a plan against one or more scenarios.

    ``seed``, ``dt`` and ``duration`` override the scenario's ``[sim]``
    section when given. With several scenarios each run writes into its own
    subdirectory of ``out_dir`` named after the scenario file.
    """

    scenarios: tuple[str, ...] = pydantic.Field(min_length=1)
    plan: str
    out_dir: str
    seed: int | None = pydantic.Field(default=None, ge=0)
    dt: float | None = pydantic.Field(default=None, gt=0, le=0.05)
    duration: float | None = pydantic.Field(default=None, gt=0)
    jobs: int = pydantic.Field(default=1, ge=1)

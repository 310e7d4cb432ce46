"""Vehicle-parameter file reader and writer."""

import pydantic

from src import exceptions
from src.common import config_text
from src.common import types as common_types
from src.core.domain import model

# field name -> (section, key, kind)
_LAYOUT: dict[str, tuple[str, str, str]] = {
    "mass": ("vehicle", "mass", "float"),
    "displaced_mass": ("vehicle", "displaced_mass", "float"),
    "ballast_mass": ("vehicle", "ballast_mass", "float"),
    "inertia_xx": ("vehicle", "inertia_xx", "float"),
    "inertia_yy": ("vehicle", "inertia_yy", "float"),
    "inertia_zz": ("vehicle", "inertia_zz", "float"),
    "r_cg": ("hydrostatics", "r_cg", "vector3"),
    "r_cb": ("hydrostatics", "r_cb", "vector3"),
    "d_lin": ("damping", "d_lin", "vector6"),
    "d_quad": ("damping", "d_quad", "vector6"),
    "l1": ("thrusters", "l1", "float"),
    "l2": ("thrusters", "l2", "float"),
    "l3": ("thrusters", "l3", "float"),
    "l4": ("thrusters", "l4", "float"),
    "t_max": ("thrusters", "t_max", "float"),
    "coriolis_enabled": ("model", "coriolis_enabled", "bool"),
    "velocity_limit": ("model", "velocity_limit", "float"),
    "rate_limit": ("model", "rate_limit", "float"),
}

_EXTRA_KEYS = {("hydrostatics", "metacentric_height")}
REQUIRED = (("vehicle", "mass"), ("vehicle", "displaced_mass"))
SECTIONS = ("vehicle", "hydrostatics", "damping", "thrusters", "model")


def load_params(text: str, source: str = "<params>") -> model.VehicleParams:
    """Parse and validate a vehicle-parameter document."""
    document = config_text.ConfigDocument(text, source=source)
    return params_from_document(document, required=True)


def params_from_document(
    document: config_text.ConfigDocument,
    base: model.VehicleParams | None = None,
    required: bool = False,
) -> model.VehicleParams:
    """Build params from the vehicle sections of a document, layered over ``base``."""
    if required:
        for section, key in REQUIRED:
            if not document.has(section, key):
                raise document.error(section, key, "required key is missing")

    allowed: dict[str, set[str]] = {section: set() for section in SECTIONS}
    for section, key, _ in _LAYOUT.values():
        allowed[section].add(key)
    for section, key in _EXTRA_KEYS:
        allowed[section].add(key)
    for section in SECTIONS:
        document.reject_unknown(section, allowed[section])

    values = (base or model.VehicleParams()).model_dump()
    for field, (section, key, kind) in _LAYOUT.items():
        if not document.has(section, key):
            continue
        if kind == "float":
            values[field] = document.get_float(section, key)
        elif kind == "bool":
            values[field] = document.get_bool(section, key)
        elif kind == "vector3":
            values[field] = document.get_vector(section, key, 3)
        else:
            values[field] = document.get_vector(section, key, 6)

    height = document.get_float("hydrostatics", "metacentric_height")
    if height is not None:
        if document.has("hydrostatics", "r_cb"):
            raise document.error(
                "hydrostatics", "metacentric_height", "give either r_cb or metacentric_height"
            )
        cg = values["r_cg"]
        values["r_cb"] = (cg[0], cg[1], cg[2] - height)

    try:
        return model.VehicleParams(**values)
    except pydantic.ValidationError as exc:
        error = exc.errors()[0]
        field = str(error["loc"][0]) if error["loc"] else ""
        section, key, _ = _LAYOUT.get(field, ("vehicle", field, ""))
        raise exceptions.ValidationError(
            f"{document.source}: [{section}] {key}: {error['msg']}"
            + (f" (line {document.line_of(section, key)})" if document.line_of(section, key) else "")
        ) from exc


def dump_params(params: model.VehicleParams) -> str:
    """Serialise params so that load_params(dump_params(p)) == p."""
    sections: dict[str, dict[str, str]] = {section: {} for section in SECTIONS}
    for field, (section, key, kind) in _LAYOUT.items():
        value = getattr(params, field)
        if kind == "bool":
            rendered = "true" if value else "false"
        elif kind == "float":
            rendered = repr(float(value))
        else:
            rendered = common_types.format_vector(value)
        sections[section][key] = rendered
    return config_text.render_document(sections, header="Anahita vehicle parameters (SI units)")


def default_params() -> model.VehicleParams:
    """The slightly positively buoyant default profile."""
    return model.VehicleParams()


class ParamsFileReader:
    """Load vehicle parameters from disk, falling back to the default profile."""

    def load(self, path: str | None) -> model.VehicleParams:
        if path is None:
            return default_params()
        return load_params(read_text(path), source=path)


def read_text(path: str) -> str:
    """Read a structured-text file, reporting a missing file as a not-found error."""
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except FileNotFoundError as exc:
        raise exceptions.NotFoundError(f"File not found: {path}") from exc
    except IsADirectoryError as exc:
        raise exceptions.ValidationError(f"Expected a file, got a directory: {path}") from exc

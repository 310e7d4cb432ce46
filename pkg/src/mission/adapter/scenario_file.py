"""Scenario file reader.

Sections: ``[sim]``, the vehicle sections of a parameter file (inline
overrides, layered over ``params = <path>`` when given), ``[initial]``,
``[noise]``, ``[pid.<axis>]``, ``[power]``, ``[world]``, ``[water]``,
``[ping]`` and one ``[target.<name>]`` per world object.
"""

import logging
import pathlib

from src.acoustics.domain import model as acoustics_model
from src.common import config_text
from src.control.domain import model as control_model
from src.core.adapter import params_file
from src.core.domain import model as core_model
from src.mission.domain import scenario
from src.power.domain import model as power_model
from src.sensors.domain import model as sensors_model
from src.vision.domain import camera

logger = logging.getLogger(__name__)

_SIM = {"dt": "float", "duration": "float", "seed": "int", "integrator": "str", "params": "str"}
_POSE = {name: "float" for name in ("x", "y", "z", "phi", "theta", "psi")}
_NOISE = {
    "attitude_sigma": "float",
    "rate_sigma": "float",
    "depth_sigma": "float",
    "dvl_sigma": "float",
    "yaw_bias": "float",
    "dropout": "float",
}
_PID = {name: "float" for name in ("kp", "ki", "kd", "out_min", "out_max", "i_min", "i_max")}
_POWER = {
    "idle_5v": "float",
    "idle_12v": "float",
    "idle_19v": "float",
    "idle_unreg": "float",
    "amps_per_newton": "float",
    "hall_sensitivity": "float",
    "current_sigma": "float",
    "pods": "int",
    "events": "str",
}
_WORLD = {"floor_depth": "float", "array_side": "float"}
_WATER = {
    "degrade": "bool",
    "enhance": "bool",
    "beta": "vector3",
    "backlight": "vector3",
    "clip_limit": "float",
}
_PING = {
    "frequency": "float",
    "duration": "float",
    "interval": "float",
    "taper": "float",
    "source_level": "float",
    "snr_db": "optional_float",
    "pre_trigger": "float",
    "record_length": "float",
}
_TARGET = {
    "kind": "str",
    "position": "vector3",
    "size": "float",
    "height": "float",
    "post_width": "float",
    "heading": "float",
    "color": "vector3",
    "frequency": "float",
}
_FIXED_SECTIONS = {"sim", "initial", "noise", "power", "world", "water", "ping", *params_file.SECTIONS}


def _power_events(document: config_text.ConfigDocument, raw: str | None) -> tuple[power_model.PowerEvent, ...]:
    """``time:kind[:pod]`` items separated by commas."""
    if not raw:
        return ()
    events = []
    for item in (part.strip() for part in raw.split(",") if part.strip()):
        fields = item.split(":")
        if len(fields) not in (2, 3):
            raise document.error("power", "events", f"expected time:kind[:pod], got {item!r}")
        try:
            values = {"time": float(fields[0]), "kind": power_model.PowerEventKind(fields[1].strip())}
            if len(fields) == 3:
                values["pod"] = int(fields[2])
        except ValueError as exc:
            raise document.error("power", "events", f"cannot read {item!r}") from exc
        events.append(config_text.build_model(document, "power", power_model.PowerEvent, values))
    return tuple(events)


def _gains(document: config_text.ConfigDocument) -> dict[control_model.Axis, control_model.PidGains]:
    gains = dict(control_model.DEFAULT_GAINS)
    for section in document.sections("pid"):
        name = section.split(".", 1)[1]
        try:
            axis = control_model.Axis(name)
        except ValueError as exc:
            raise document.error(section, None, f"unknown axis {name!r}") from exc
        values = {**gains[axis].model_dump(), **config_text.read_section(document, section, _PID)}
        gains[axis] = config_text.build_model(document, section, control_model.PidGains, values)
    return gains


def _targets(document: config_text.ConfigDocument) -> tuple[camera.VisualTarget, ...]:
    targets = []
    for section in document.sections("target"):
        values = config_text.read_section(document, section, _TARGET)
        document.require_keys(section, ("kind", "position"))
        values["name"] = section.split(".", 1)[1]
        targets.append(config_text.build_model(document, section, camera.VisualTarget, values))
    return tuple(targets)


def scenario_from_document(
    document: config_text.ConfigDocument, base_dir: pathlib.Path | None = None
) -> scenario.Scenario:
    for section in document.sections():
        if section not in _FIXED_SECTIONS and not section.startswith(("pid.", "target.")):
            raise document.error(section, None, "unknown section")

    sim_values = config_text.read_section(document, "sim", _SIM)
    base_params = None
    params_path = sim_values.pop("params", None)
    if params_path is not None:
        path = pathlib.Path(params_path)
        if not path.is_absolute() and base_dir is not None:
            path = base_dir / path
        base_params = params_file.ParamsFileReader().load(str(path))
    params = params_file.params_from_document(document, base=base_params)

    power_values = config_text.read_section(document, "power", _POWER)
    events = _power_events(document, power_values.pop("events", None))

    values = {
        "sim": config_text.build_model(document, "sim", core_model.SimConfig, sim_values),
        "params": params,
        "initial": config_text.build_model(
            document, "initial", core_model.Pose, config_text.read_section(document, "initial", _POSE)
        ),
        "noise": config_text.build_model(
            document, "noise", sensors_model.NoiseConfig, config_text.read_section(document, "noise", _NOISE)
        ),
        "gains": _gains(document),
        "power": config_text.build_model(document, "power", power_model.PowerConfig, power_values),
        "power_events": events,
        "targets": _targets(document),
        "water": config_text.build_model(
            document, "water", scenario.WaterConfig, config_text.read_section(document, "water", _WATER)
        ),
        "ping": config_text.build_model(
            document, "ping", acoustics_model.PingConfig, config_text.read_section(document, "ping", _PING)
        ),
        **config_text.read_section(document, "world", _WORLD),
    }
    return config_text.build_model(document, "world", scenario.Scenario, values)


def load_scenario(text: str, source: str = "<scenario>", base_dir: pathlib.Path | None = None) -> scenario.Scenario:
    return scenario_from_document(config_text.ConfigDocument(text, source=source), base_dir)


class ScenarioFileReader:
    def load(self, path: str) -> scenario.Scenario:
        text = params_file.read_text(path)
        loaded = load_scenario(text, source=path, base_dir=pathlib.Path(path).parent)
        logger.debug("Loaded scenario %s with %d targets", path, len(loaded.targets))
        return loaded


"""Mission plan file reader.

Each ``[task.N]`` section is one task; tasks run in ascending N::

    [task.1]
    kind = gate
    target = gate
    timeout = 90
    transit = heave:1.5:20, surge:3
    switches = surge, sway, heave, yaw
    vision = on
"""

import logging

from src import exceptions
from src.common import config_text
from src.control.domain import model as control_model
from src.core.adapter import params_file
from src.mission.domain import model
from src.mission.domain.status import TaskKind, TransitMotion

logger = logging.getLogger(__name__)

_TASK = {
    "name": "str",
    "kind": "str",
    "target": "str",
    "timeout": "float",
    "transit": "str",
    "switches": "str",
    "vision": "bool",
}


def _transits(document: config_text.ConfigDocument, section: str) -> tuple[model.Transit, ...]:
    """``motion:setpoint[:timeout]`` items separated by commas."""
    transits = []
    for item in document.get_list(section, "transit"):
        fields = [field.strip() for field in item.split(":")]
        if len(fields) not in (2, 3):
            raise document.error(section, "transit", f"expected motion:setpoint[:timeout], got {item!r}")
        try:
            values = {"motion": TransitMotion(fields[0]), "setpoint": float(fields[1])}
            if len(fields) == 3:
                values["timeout"] = float(fields[2])
        except ValueError as exc:
            raise document.error(section, "transit", f"cannot read {item!r}") from exc
        transits.append(config_text.build_model(document, section, model.Transit, values))
    return tuple(transits)


def _switches(document: config_text.ConfigDocument, section: str) -> frozenset[control_model.Axis]:
    if not document.has(section, "switches"):
        return model.ALL_AXES
    try:
        return frozenset(control_model.Axis(name) for name in document.get_list(section, "switches"))
    except ValueError as exc:
        raise document.error(section, "switches", str(exc)) from exc


def _order(document: config_text.ConfigDocument, section: str) -> int:
    suffix = section.split(".", 1)[1]
    if not suffix.isdigit():
        raise document.error(section, None, "task sections are numbered [task.N]")
    return int(suffix)


def plan_from_document(document: config_text.ConfigDocument) -> model.MissionPlan:
    for section in document.sections():
        if not section.startswith("task."):
            raise document.error(section, None, "unknown section")
    sections = sorted(document.sections("task"), key=lambda section: _order(document, section))
    if not sections:
        raise exceptions.ConfigParseError(f"{document.source}: no [task.N] sections")

    tasks = []
    for section in sections:
        values = config_text.read_section(document, section, _TASK)
        document.require_keys(section, ("kind",))
        kind = values["kind"]
        if kind not in set(TaskKind):
            raise document.error(section, "kind", f"unknown task kind {kind!r}")
        values["transit"] = _transits(document, section)
        values["switches"] = _switches(document, section)
        values.setdefault("name", f"{kind}{_order(document, section)}")
        tasks.append(config_text.build_model(document, section, model.Task, values))
    return model.MissionPlan(tasks=tuple(tasks))


def load_plan(text: str, source: str = "<plan>") -> model.MissionPlan:
    return plan_from_document(config_text.ConfigDocument(text, source=source))


class PlanFileReader:
    def load(self, path: str) -> model.MissionPlan:
        plan = load_plan(params_file.read_text(path), source=path)
        logger.debug("Loaded plan %s with %d tasks", path, len(plan.tasks))
        return plan

"""Structured-text configuration documents.

Vehicle parameter, scenario and mission plan files all share one dialect:
bracketed section headers, ``key = value`` lines, ``#`` comments and SI
units. Vectors are written as comma-separated numbers.
"""

import configparser
import math
import re
from collections.abc import Iterable, Iterator
from typing import Any, TypeVar

import pydantic

from src import exceptions

ModelT = TypeVar("ModelT", bound=pydantic.BaseModel)

_SECTION_RE = re.compile(r"^\s*\[(?P<name>[^\]]+)\]")
_KEY_RE = re.compile(r"^\s*(?P<key>[^=#\s][^=]*?)\s*=")

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ConfigDocument:
    """Parsed document with line-aware typed accessors."""

    def __init__(self, text: str, source: str = "<text>") -> None:
        self._source = source
        self._parser = configparser.ConfigParser(
            interpolation=None,
            comment_prefixes=("#",),
            inline_comment_prefixes=("#",),
            strict=True,
            empty_lines_in_values=False,
        )
        self._parser.optionxform = str  # type: ignore[assignment,method-assign]
        try:
            self._parser.read_string(text, source=source)
        except configparser.MissingSectionHeaderError as exc:
            raise exceptions.ConfigParseError(
                f"{source}: expected a [section] header before {exc.line.strip()!r}",
                line=exc.lineno,
            ) from exc
        except configparser.ParsingError as exc:
            lineno, line = exc.errors[0]
            raise exceptions.ConfigParseError(
                f"{source}: cannot parse {line.strip()!r}", line=lineno
            ) from exc
        except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as exc:
            raise exceptions.ConfigParseError(f"{source}: {exc.message}", line=exc.lineno) from exc
        self._lines = _index_lines(text)

    @property
    def source(self) -> str:
        return self._source

    def has_section(self, section: str) -> bool:
        return self._parser.has_section(section)

    def sections(self, prefix: str | None = None) -> list[str]:
        """Section names in file order, optionally filtered by ``prefix.``."""
        names = self._parser.sections()
        if prefix is None:
            return names
        return [name for name in names if name.startswith(f"{prefix}.")]

    def keys(self, section: str) -> list[str]:
        if not self._parser.has_section(section):
            return []
        return list(self._parser[section].keys())

    def has(self, section: str, key: str) -> bool:
        return self._parser.has_option(section, key)

    def line_of(self, section: str, key: str | None = None) -> int | None:
        return self._lines.get((section, key))

    def error(self, section: str, key: str | None, message: str) -> exceptions.ConfigParseError:
        """Build a parse error that points at the offending line."""
        where = f"[{section}]" if key is None else f"[{section}] {key}"
        return exceptions.ConfigParseError(
            f"{self._source}: {where}: {message}", line=self.line_of(section, key)
        )

    def require_keys(self, section: str, required: Iterable[str]) -> None:
        missing = [key for key in required if not self.has(section, key)]
        if missing:
            raise self.error(section, None, f"missing required keys: {', '.join(missing)}")

    def reject_unknown(self, section: str, allowed: Iterable[str]) -> None:
        allowed_set = set(allowed)
        for key in self.keys(section):
            if key not in allowed_set:
                raise self.error(section, key, "unknown key")

    def get_str(self, section: str, key: str, default: str | None = None) -> str | None:
        if not self.has(section, key):
            return default
        return self._parser.get(section, key).strip()

    def get_float(self, section: str, key: str, default: float | None = None) -> float | None:
        raw = self.get_str(section, key)
        if raw is None:
            return default
        try:
            value = float(raw)
        except ValueError as exc:
            raise self.error(section, key, f"expected a number, got {raw!r}") from exc
        if not math.isfinite(value):
            raise self.error(section, key, "value must be finite")
        return value

    def get_int(self, section: str, key: str, default: int | None = None) -> int | None:
        raw = self.get_str(section, key)
        if raw is None:
            return default
        try:
            return int(raw, 0)
        except ValueError as exc:
            raise self.error(section, key, f"expected an integer, got {raw!r}") from exc

    def get_bool(self, section: str, key: str, default: bool | None = None) -> bool | None:
        raw = self.get_str(section, key)
        if raw is None:
            return default
        lowered = raw.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise self.error(section, key, f"expected a boolean, got {raw!r}")

    def get_vector(
        self, section: str, key: str, length: int, default: tuple[float, ...] | None = None
    ) -> tuple[float, ...] | None:
        raw = self.get_str(section, key)
        if raw is None:
            return default
        parts = [part.strip() for part in raw.split(",") if part.strip()]
        if len(parts) != length:
            raise self.error(section, key, f"expected {length} comma-separated numbers")
        try:
            values = tuple(float(part) for part in parts)
        except ValueError as exc:
            raise self.error(section, key, f"expected numbers, got {raw!r}") from exc
        if not all(math.isfinite(v) for v in values):
            raise self.error(section, key, "values must be finite")
        return values

    def get_list(self, section: str, key: str) -> list[str]:
        raw = self.get_str(section, key)
        if raw is None:
            return []
        return [part.strip() for part in raw.split(",") if part.strip()]

    def items(self, section: str) -> Iterator[tuple[str, str]]:
        for key in self.keys(section):
            yield key, self._parser.get(section, key).strip()


KINDS = ("float", "int", "bool", "str", "vector3", "optional_float")


def read_section(
    document: ConfigDocument, section: str, spec: dict[str, str]
) -> dict[str, Any]:
    """Typed values of the keys present in ``section``; unknown keys are rejected.

    ``spec`` maps key to one of ``KINDS``. ``optional_float`` accepts ``none``.
    """
    document.reject_unknown(section, spec)
    values: dict[str, Any] = {}
    for key, kind in spec.items():
        if not document.has(section, key):
            continue
        match kind:
            case "float":
                values[key] = document.get_float(section, key)
            case "int":
                values[key] = document.get_int(section, key)
            case "bool":
                values[key] = document.get_bool(section, key)
            case "vector3":
                values[key] = document.get_vector(section, key, 3)
            case "optional_float":
                raw = document.get_str(section, key)
                values[key] = None if raw.lower() == "none" else document.get_float(section, key)
            case _:
                values[key] = document.get_str(section, key)
    return values


def build_model(
    document: ConfigDocument, section: str, model_cls: type[ModelT], values: dict[str, Any]
) -> ModelT:
    """Construct ``model_cls``, reporting validation failures against the section."""
    try:
        return model_cls(**values)
    except pydantic.ValidationError as exc:
        error = exc.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else None
        if key is not None and not document.has(section, key):
            key = None
        raise document.error(section, key, error["msg"]) from exc


def _index_lines(text: str) -> dict[tuple[str, str | None], int]:
    """Map (section, key) and (section, None) to 1-based line numbers."""
    index: dict[tuple[str, str | None], int] = {}
    section: str | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        match = _SECTION_RE.match(line)
        if match:
            section = match.group("name").strip()
            index.setdefault((section, None), lineno)
            continue
        match = _KEY_RE.match(line)
        if match and section is not None:
            index.setdefault((section, match.group("key").strip()), lineno)
    return index


def render_document(sections: dict[str, dict[str, str]], header: str | None = None) -> str:
    """Serialise sections back into the same dialect."""
    lines: list[str] = []
    if header:
        lines.extend(f"# {line}" for line in header.splitlines())
        lines.append("")
    for name, values in sections.items():
        lines.append(f"[{name}]")
        lines.extend(f"{key} = {value}" for key, value in values.items())
        lines.append("")
    return "\n".join(lines)

"""Headerless trace files with an ``fs = <Hz>`` sidecar."""

import pathlib

import numpy as np

from src import exceptions
from src.acoustics.domain import model
from src.common import config_text

SIDECAR_SUFFIX = ".fs"
TRACE_SUFFIX = ".txt"


def channel_stem(index: int) -> str:
    return f"h{index}"


def _sidecar_path(path: pathlib.Path) -> pathlib.Path:
    return path.with_suffix(SIDECAR_SUFFIX)


def write_trace(path: pathlib.Path, trace: model.Trace) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{sample!r}\n" for sample in trace.samples.tolist()), encoding="utf-8")
    _sidecar_path(path).write_text(f"fs = {trace.fs!r}\n", encoding="utf-8")


def read_trace(path: pathlib.Path) -> model.Trace:
    if not path.is_file():
        raise exceptions.NotFoundError(f"Trace not found: {path}")
    sidecar = _sidecar_path(path)
    if not sidecar.is_file():
        raise exceptions.NotFoundError(f"Sample-rate sidecar not found: {sidecar}")

    # the sidecar is a one-key document in the shared dialect, minus the header
    document = config_text.ConfigDocument(
        "[trace]\n" + sidecar.read_text(encoding="utf-8"), source=str(sidecar)
    )
    document.require_keys("trace", ["fs"])
    document.reject_unknown("trace", ["fs"])
    fs = document.get_float("trace", "fs")

    samples = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            samples.append(float(stripped))
        except ValueError as exc:
            raise exceptions.ConfigParseError(
                f"{path}: expected a number, got {stripped!r}", line=lineno
            ) from exc
    try:
        return model.Trace(samples=np.asarray(samples), fs=fs)
    except ValueError as exc:
        raise exceptions.ValidationError(f"{path}: {exc}") from exc


def write_array(directory: pathlib.Path, traces: list[model.Trace]) -> list[pathlib.Path]:
    """Write one file per hydrophone as h0.txt .. h3.txt."""
    paths = []
    for index, trace in enumerate(traces):
        path = directory / f"{channel_stem(index)}{TRACE_SUFFIX}"
        write_trace(path, trace)
        paths.append(path)
    return paths


def read_array(directory: pathlib.Path) -> list[model.Trace]:
    if not directory.is_dir():
        raise exceptions.NotFoundError(f"Trace directory not found: {directory}")
    return [
        read_trace(directory / f"{channel_stem(index)}{TRACE_SUFFIX}")
        for index in range(model.HYDROPHONE_COUNT)
    ]

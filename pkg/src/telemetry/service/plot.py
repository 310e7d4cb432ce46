"""SVG line charts of telemetry columns."""

import logging
import pathlib
from collections.abc import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from src import exceptions  # noqa: E402
from src.telemetry.adapter import csv_file  # noqa: E402
from src.telemetry.domain import model  # noqa: E402

logger = logging.getLogger(__name__)

# fixed salt keeps element ids stable between runs
matplotlib.rcParams["svg.hashsalt"] = "anahita"


def plot_columns(
    rows: list[model.TelemetryRow],
    columns: Sequence[str],
    path: str | pathlib.Path,
    title: str | None = None,
) -> pathlib.Path:
    """One stacked subplot per column against time."""
    if not rows:
        raise exceptions.ValidationError("no telemetry rows to plot")
    if not columns:
        raise exceptions.ValidationError("choose at least one column to plot")
    times = csv_file.column(rows, "t")
    series = {name: csv_file.column(rows, name) for name in columns}

    fig, axes = plt.subplots(len(columns), 1, sharex=True, figsize=(8, 2.2 * len(columns)), squeeze=False)
    for ax, name in zip(axes[:, 0], columns, strict=True):
        ax.plot(times, series[name], linewidth=1.0)
        ax.set_ylabel(name)
        ax.grid(True, alpha=0.3)
    axes[-1, 0].set_xlabel("t [s]")
    if title:
        fig.suptitle(title)
    fig.tight_layout()

    target = pathlib.Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(target, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info("Wrote %s (%s)", target, ", ".join(columns))
    return target

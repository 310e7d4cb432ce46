"""Telemetry dependency injection container."""

from dependency_injector import containers, providers

from src.telemetry.handler import handlers


class TelemetryHandlerContainer(containers.DeclarativeContainer):
    """Container for telemetry handlers."""

    plot_telemetry_handler = providers.Factory(handlers.PlotTelemetryHandler)


class TelemetryContainer(containers.DeclarativeContainer):
    """Root telemetry container."""

    handler = providers.Container(TelemetryHandlerContainer)

"""CLI dependency factory functions for building handlers from the container."""

import functools

from src import settings as settings_module
from src.acoustics.handler import handlers as acoustics_handlers
from src.allocation.handler import handlers as allocation_handlers
from src.core.handler import handlers as core_handlers
from src.dependency.container import ApplicationContainer
from src.mission.handler import handlers as mission_handlers
from src.telemetry.handler import handlers as telemetry_handlers
from src.vision.handler import handlers as vision_handlers


@functools.cache
def get_container() -> ApplicationContainer:
    """Application container configured from the environment settings."""
    container = ApplicationContainer()
    container.config.from_dict(settings_module.settings.model_dump())
    return container


# --- Vehicle parameter handlers ---


def build_show_params_handler() -> core_handlers.ShowParamsHandler:
    """Build ShowParamsHandler."""
    return get_container().core.handler.show_params_handler()


# --- Allocation handlers ---


def build_allocate_wrench_handler() -> allocation_handlers.AllocateWrenchHandler:
    """Build AllocateWrenchHandler."""
    return get_container().allocation.handler.allocate_wrench_handler()


# --- Acoustics handlers ---


def build_locate_pinger_handler() -> acoustics_handlers.LocatePingerHandler:
    """Build LocatePingerHandler."""
    return get_container().acoustics.handler.locate_pinger_handler()


def build_synthesize_ping_handler() -> acoustics_handlers.SynthesizePingHandler:
    """Build SynthesizePingHandler."""
    return get_container().acoustics.handler.synthesize_ping_handler()


def build_evaluate_heading_handler() -> acoustics_handlers.EvaluateHeadingHandler:
    """Build EvaluateHeadingHandler."""
    return get_container().acoustics.handler.evaluate_heading_handler()


# --- Vision handlers ---


def build_enhance_image_handler() -> vision_handlers.EnhanceImageHandler:
    """Build EnhanceImageHandler."""
    return get_container().vision.handler.enhance_image_handler()


def build_detect_object_handler() -> vision_handlers.DetectObjectHandler:
    """Build DetectObjectHandler."""
    return get_container().vision.handler.detect_object_handler()


# --- Mission and telemetry handlers ---


def build_run_mission_handler() -> mission_handlers.RunMissionHandler:
    """Build RunMissionHandler."""
    return get_container().mission.handler.run_mission_handler()


def build_plot_telemetry_handler() -> telemetry_handlers.PlotTelemetryHandler:
    """Build PlotTelemetryHandler."""
    return get_container().telemetry.handler.plot_telemetry_handler()

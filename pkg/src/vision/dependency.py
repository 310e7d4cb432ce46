"""Vision dependency injection container."""

from dependency_injector import containers, providers

from src.vision.handler import handlers


class VisionHandlerContainer(containers.DeclarativeContainer):
    """Container for vision handlers."""

    enhance_image_handler = providers.Factory(handlers.EnhanceImageHandler)

    detect_object_handler = providers.Factory(handlers.DetectObjectHandler)


class VisionContainer(containers.DeclarativeContainer):
    """Root vision container."""

    handler = providers.Container(VisionHandlerContainer)

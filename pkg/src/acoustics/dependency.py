"""Acoustics dependency injection container."""

from dependency_injector import containers, providers

from src.acoustics.domain import model
from src.acoustics.handler import handlers


class AcousticsConfigContainer(containers.DeclarativeContainer):
    """Container for the ping, analog chain and ADC settings."""

    ping = providers.Singleton(model.PingConfig)
    analog = providers.Singleton(model.AnalogChainConfig)
    adc = providers.Singleton(model.AdcConfig)


class AcousticsHandlerContainer(containers.DeclarativeContainer):
    """Container for acoustics handlers."""

    config = providers.DependenciesContainer()

    locate_pinger_handler = providers.Factory(handlers.LocatePingerHandler)

    synthesize_ping_handler = providers.Factory(
        handlers.SynthesizePingHandler,
        ping=config.ping,
        analog=config.analog,
        adc_cfg=config.adc,
    )

    evaluate_heading_handler = providers.Factory(handlers.EvaluateHeadingHandler)


class AcousticsContainer(containers.DeclarativeContainer):
    """Root acoustics container."""

    config = providers.Container(AcousticsConfigContainer)

    handler = providers.Container(
        AcousticsHandlerContainer,
        config=config,
    )

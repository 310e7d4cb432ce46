"""Vehicle parameter dependency injection container."""

from dependency_injector import containers, providers

from src.core.adapter import params_file
from src.core.handler import handlers


class CoreAdapterContainer(containers.DeclarativeContainer):
    """Container for vehicle parameter file access."""

    params_reader = providers.Singleton(params_file.ParamsFileReader)


class CoreHandlerContainer(containers.DeclarativeContainer):
    """Container for vehicle parameter handlers."""

    adapter = providers.DependenciesContainer()

    show_params_handler = providers.Factory(
        handlers.ShowParamsHandler,
        params_reader=adapter.params_reader,
    )


class CoreContainer(containers.DeclarativeContainer):
    """Root vehicle parameter container."""

    adapter = providers.Container(CoreAdapterContainer)

    handler = providers.Container(
        CoreHandlerContainer,
        adapter=adapter,
    )

"""Allocation dependency injection container."""

from dependency_injector import containers, providers

from src.allocation.handler import handlers


class AllocationHandlerContainer(containers.DeclarativeContainer):
    """Container for allocation handlers."""

    core_adapter = providers.DependenciesContainer()

    allocate_wrench_handler = providers.Factory(
        handlers.AllocateWrenchHandler,
        params_reader=core_adapter.params_reader,
    )


class AllocationContainer(containers.DeclarativeContainer):
    """Root allocation container."""

    core_adapter = providers.DependenciesContainer()

    handler = providers.Container(
        AllocationHandlerContainer,
        core_adapter=core_adapter,
    )

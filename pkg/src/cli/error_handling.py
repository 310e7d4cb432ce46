"""CLI error handling utilities."""

import functools
from collections.abc import Callable, Coroutine
from typing import Any, TypeVar

import pydantic
import rich.console
import typer

from src import exceptions as exceptions_module

console = rich.console.Console(stderr=True)

T = TypeVar("T")

# scriptable exit codes: 0 success, 2 bad input, 3 numerical failure
EXIT_INPUT = 2
EXIT_SIMULATION = 3


def handle_domain_errors(
    func: Callable[..., Coroutine[Any, Any, T]],
) -> Callable[..., Coroutine[Any, Any, T]]:
    """Decorator that converts domain exceptions to CLI error output."""

    @functools.wraps(func)
    async def wrapper(*args: Any, **kwargs: Any) -> T:
        try:
            return await func(*args, **kwargs)
        except exceptions_module.NotFoundError as exc:
            console.print(f"[red]Not found:[/red] {exc.message}")
            raise typer.Exit(EXIT_INPUT) from exc
        except exceptions_module.ConfigParseError as exc:
            console.print(f"[red]Parse error:[/red] {exc.message}")
            raise typer.Exit(EXIT_INPUT) from exc
        except exceptions_module.ValidationError as exc:
            console.print(f"[red]Validation error:[/red] {exc.message}")
            raise typer.Exit(EXIT_INPUT) from exc
        except pydantic.ValidationError as exc:
            console.print(f"[red]Validation error:[/red] {exc.errors()[0]['msg']}")
            raise typer.Exit(EXIT_INPUT) from exc
        except exceptions_module.InvalidStateError as exc:
            console.print(f"[red]Invalid state:[/red] {exc.message}")
            raise typer.Exit(EXIT_INPUT) from exc
        except exceptions_module.SimulationError as exc:
            console.print(f"[red]Simulation error:[/red] {exc.message}")
            raise typer.Exit(EXIT_SIMULATION) from exc
        except exceptions_module.ApplicationError as exc:
            console.print(f"[red]Error:[/red] {exc.message}")
            raise typer.Exit(EXIT_INPUT) from exc

    return wrapper

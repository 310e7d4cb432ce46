"""Dependency injection containers."""

from src.dependency.container import ApplicationContainer

__all__ = ["ApplicationContainer"]

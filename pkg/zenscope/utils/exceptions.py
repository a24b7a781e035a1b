"""
Exceptions module.
"""
from __future__ import annotations

from typing import Any


class ZenscopeError(Exception):
    """
    Base class for zenscope exception.
    """


class DataError(ZenscopeError):
    """
    Raised when input data cannot be parsed or violates its contract.
    """


class ConfigError(ZenscopeError):
    """
    Raised when a configuration is invalid.
    """


class FitError(ZenscopeError):
    """
    Raised when a marginal model cannot be fitted.

    Attributes
    ----------
    best : Any
        Best point found by the optimizer, if any.
    """

    def __init__(self, message: str, best: Any = None) -> None:
        super().__init__(message)
        self.best = best


class DependenceError(ZenscopeError, ValueError):
    """
    Raised on degenerate concordance, copula or distribution inputs.
    """


class GofError(ZenscopeError):
    """
    Raised when a goodness-of-fit computation cannot run.
    """


class PathError(ZenscopeError):
    """
    Raised when a zenpath cannot be built.
    """


class LayoutError(ZenscopeError):
    """
    Raised when a direction sequence cannot be placed.

    Attributes
    ----------
    step : int | None
        One-based index of the offending direction.
    """

    def __init__(self, message: str, step: int | None = None) -> None:
        super().__init__(message)
        self.step = step


class RenderError(ZenscopeError):
    """
    Raised when panels do not match the layout cells.
    """


class StoreError(ZenscopeError):
    """
    Raised when artifacts cannot be persisted or read back.
    """


class RunError(ZenscopeError):
    """
    Raised when a run cannot start or complete.
    """

"""
Base report module.
"""
from __future__ import annotations


class BaseReport:
    """
    Base class of per-item reports.

    Attributes
    ----------
    duration : float
        Time required by the computation, in seconds.
    """

    def __init__(self, duration: float | None = None) -> None:
        """
        Constructor.
        """
        self.duration = duration

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.to_dict()})"

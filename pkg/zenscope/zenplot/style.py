"""
Zenplot style configuration.
"""
from __future__ import annotations

from typing import List

from pydantic import BaseModel, Extra, ValidationError, validator

from zenscope.utils.exceptions import ConfigError


class StyleConfig(BaseModel):
    """
    Global style of rendered zenplots.
    """

    unit: float = 120.0
    """Side of a 2D panel, in pixels."""

    one_d_fraction: float = 0.2
    """Thickness of a 1D panel as a fraction of the 2D panel side."""

    margin: float = 10.0
    """Blank border around the plot, in pixels."""

    point_radius: float = 0.008
    """Radius of scatter and Q-Q points as a fraction of the panel side."""

    point_opacity: float = 0.25
    """Fill opacity of points."""

    point_color: str = "#000000"
    """Point colour."""

    line_color: str = "#000000"
    """Colour of bars, reference lines and arrows."""

    band_color: str = "#1f4e99"
    """Colour of the dashed ACF white-noise band."""

    envelope_greys: List[str] = ["#7a7a7a", "#a0a0a0", "#c6c6c6", "#e4e4e4"]
    """Envelope fills from the narrowest (darkest) band to the simulated range (lightest)."""

    panel_border: str = "#d0d0d0"
    """Stroke of the 2D panel frames, empty for none."""

    separator_fill: str = "#f0f0f0"
    """Fill of the block between concatenated paths."""

    background: str = "#ffffff"
    """Canvas colour."""

    font_family: str = "sans-serif"
    """Label font family."""

    font_size: float = 10.0
    """Label font size, in pixels."""

    class Config:
        extra = Extra.forbid

    @validator("unit", "font_size")
    def _positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("must be positive")
        return value

    @validator("one_d_fraction", "point_radius")
    def _fraction(cls, value: float) -> float:
        if not 0 < value < 1:
            raise ValueError("must lie in (0, 1)")
        return value

    @validator("point_opacity")
    def _opacity(cls, value: float) -> float:
        if not 0 < value <= 1:
            raise ValueError("must lie in (0, 1]")
        return value

    @validator("envelope_greys")
    def _greys(cls, value: list) -> list:
        if len(value) < 2:
            raise ValueError("needs at least two colours")
        return value

    @property
    def one_d(self) -> float:
        """
        Thickness of a 1D panel, in pixels.
        """
        return self.unit * self.one_d_fraction

    @property
    def pitch(self) -> float:
        """
        Distance between the origins of neighbouring 2D panels, in pixels.
        """
        return self.unit + self.one_d


def load_style(path: str) -> StyleConfig:
    """
    Read a style override file, a JSON object of StyleConfig keys.

    Raises
    ------
    ConfigError
        If the file cannot be read or holds unknown or invalid keys.
    """
    try:
        return StyleConfig.parse_file(path)
    except FileNotFoundError as exc:
        raise ConfigError(f"Style file not found: {path}") from exc
    except (ValidationError, ValueError) as exc:
        raise ConfigError(f"Invalid style file {path}: {exc}") from exc

"""
Panel contents.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from zenscope.margins.envelope import qq_points
from zenscope.margins.objects import QQEnvelope
from zenscope.utils.exceptions import RenderError

PANEL_KINDS = ("scatter", "acf", "qq", "label", "arrow")


class PanelSpec:
    """
    Content of a panel.

    Attributes
    ----------
    kind : str
        One of scatter, acf, qq, label, arrow.
    data : dict
        Kind specific data.
    """

    def __init__(self, kind: str, data: Optional[dict] = None) -> None:
        if kind not in PANEL_KINDS:
            raise RenderError(f"Unknown panel kind {kind!r}.")
        self.kind = kind
        self.data = data or {}

    def __repr__(self) -> str:
        return f"PanelSpec(kind={self.kind})"


def scatter_panel(
    x: np.ndarray,
    y: np.ndarray,
    xlim: Optional[tuple[float, float]] = (0.0, 1.0),
    ylim: Optional[tuple[float, float]] = (0.0, 1.0),
) -> PanelSpec:
    """
    Scatter plot of two series, on the unit square by default.

    Limits set to None are taken from the data.

    Raises
    ------
    RenderError
        If the series lengths differ.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise RenderError(f"Scatter series must have equal lengths, got {x.shape} and {y.shape}.")
    xlim = xlim if xlim is not None else _limits(x)
    ylim = ylim if ylim is not None else _limits(y)
    return PanelSpec("scatter", {"x": x, "y": y, "xlim": xlim, "ylim": ylim})


def acf_panel(values: np.ndarray, band: float) -> PanelSpec:
    """
    Autocorrelation bars with the dashed white-noise band.
    """
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise RenderError("ACF panel needs a non-empty vector of autocorrelations.")
    return PanelSpec("acf", {"values": values, "band": float(band)})


def qq_panel(sample: np.ndarray, nu_hat: float, envelope: Optional[QQEnvelope] = None) -> PanelSpec:
    """
    Q-Q plot of a sample against the scaled t distribution.

    Raises
    ------
    RenderError
        If the envelope was simulated for another sample size.
    """
    theo, ordered = qq_points(sample, nu_hat)
    if envelope is not None and envelope.n != ordered.size:
        raise RenderError(f"Envelope size {envelope.n} does not match sample size {ordered.size}.")
    return PanelSpec("qq", {"theoretical": theo, "sample": ordered, "envelope": envelope})


def label_panel(texts: tuple[str, ...]) -> PanelSpec:
    return PanelSpec("label", {"texts": tuple(texts)})


def arrow_panel(direction: str) -> PanelSpec:
    return PanelSpec("arrow", {"direction": direction})


def _limits(values: np.ndarray) -> tuple[float, float]:
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        return (0.0, 1.0)
    lo, hi = float(finite.min()), float(finite.max())
    if hi == lo:
        return (lo - 0.5, hi + 0.5)
    return (lo, hi)

"""
SVG rendering of zenplots and dependence matrices.

Every panel of a layout becomes its own matplotlib axes, placed in pixel units
by the layout geometry. Figures are built without pyplot and written by the
SVG backend with a fixed hash salt and no date, so identical inputs give
byte-identical documents.
"""
from __future__ import annotations

import io
import math
import typing
from typing import Optional, Sequence

import matplotlib
import numpy as np
from matplotlib.axes import Axes
from matplotlib.colors import to_rgba
from matplotlib.figure import Figure

from zenscope.dependence.matrix import SIGNED_MEASURES
from zenscope.utils.exceptions import RenderError
from zenscope.zenplot.layout import ARROW, SEPARATOR
from zenscope.zenplot.panels import arrow_panel, label_panel
from zenscope.zenplot.style import StyleConfig

if typing.TYPE_CHECKING:
    from zenscope.dataset.objects import SectorMap
    from zenscope.dependence.matrix import DependenceMatrix
    from zenscope.zenplot.layout import Cell, LayoutGrid
    from zenscope.zenplot.panels import PanelSpec

DATA_KINDS = ("scatter", "acf", "qq")

# SVG units are points, one pixel of the layout is drawn as one point
PX_PER_INCH = 72.0
SVG_RC = {"svg.hashsalt": "zenscope", "svg.fonttype": "none"}


class _Frame:
    """
    Pixel geometry of a layout.
    """

    def __init__(self, grid: LayoutGrid, style: StyleConfig) -> None:
        self.style = style
        xs = [self._span(c.col) for c in grid.cells]
        ys = [self._span(c.row) for c in grid.cells]
        self.x0 = min(s for s, _ in xs)
        self.y0 = min(s for s, _ in ys)
        self.width = max(s + w for s, w in xs) - self.x0 + 2 * style.margin
        self.height = max(s + h for s, h in ys) - self.y0 + 2 * style.margin

    def _span(self, v: float) -> tuple[float, float]:
        k = math.floor(v)
        if v == k:
            return (k * self.style.pitch, self.style.unit)
        return (k * self.style.pitch + self.style.unit, self.style.one_d)

    def box(self, cell: Cell) -> tuple[float, float, float, float]:
        sx, w = self._span(cell.col)
        sy, h = self._span(cell.row)
        return (sx - self.x0 + self.style.margin, sy - self.y0 + self.style.margin, w, h)


#############################
# Figure helpers
#############################


def _figure(width: float, height: float, style: StyleConfig) -> Figure:
    fig = Figure(figsize=(width / PX_PER_INCH, height / PX_PER_INCH))
    fig.patch.set_facecolor(style.background)
    return fig


def _axes(fig: Figure, box: tuple, border: str = "") -> Axes:
    """
    Axes on a pixel box (x, y, w, h) with y growing downward, no ticks.
    """
    width, height = fig.get_size_inches() * PX_PER_INCH
    x0, y0, w, h = box
    ax = fig.add_axes((x0 / width, 1.0 - (y0 + h) / height, w / width, h / height))
    ax.set_xticks([])
    ax.set_yticks([])
    ax.patch.set_visible(False)
    for spine in ax.spines.values():
        if border:
            spine.set_edgecolor(border)
            spine.set_linewidth(0.5)
        else:
            spine.set_visible(False)
    return ax


def _points(ax: Axes, x: np.ndarray, y: np.ndarray, style: StyleConfig) -> None:
    ax.plot(
        x,
        y,
        linestyle="none",
        marker="o",
        markersize=2.0 * style.point_radius * style.unit,
        markerfacecolor=to_rgba(style.point_color, style.point_opacity),
        markeredgewidth=0.0,
    )


def _to_svg(fig: Figure, stamp: Optional[str]) -> str:
    metadata = {"Date": None}
    if stamp is not None:
        metadata["Description"] = stamp
    buff = io.StringIO()
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(buff, format="svg", metadata=metadata, facecolor=fig.get_facecolor())
    return buff.getvalue()


#############################
# 2D panels
#############################


def _scatter(ax: Axes, spec: PanelSpec, style: StyleConfig) -> None:
    x, y = spec.data["x"], spec.data["y"]
    keep = np.isfinite(x) & np.isfinite(y)
    ax.set_xlim(*spec.data["xlim"])
    ax.set_ylim(*spec.data["ylim"])
    _points(ax, x[keep], y[keep], style)


def _acf(ax: Axes, spec: PanelSpec, style: StyleConfig) -> None:
    values, band = spec.data["values"], spec.data["band"]
    ax.set_xlim(0, values.size)
    ax.set_ylim(-1.0, 1.0)
    ax.axhline(0.0, color=style.line_color, linewidth=0.5)
    for lim in (band, -band):
        ax.axhline(lim, color=style.band_color, linewidth=0.75, linestyle=(0, (3, 2)))
    lags = np.arange(values.size) + 0.5
    width = ax.get_position().width * ax.figure.get_figwidth() * PX_PER_INCH / max(values.size, 1)
    ax.vlines(lags, 0.0, values, color=style.line_color, linewidth=max(0.5, 0.4 * width))


def _qq(ax: Axes, spec: PanelSpec, style: StyleConfig) -> None:
    theo, sample, env = spec.data["theoretical"], spec.data["sample"], spec.data["envelope"]
    parts = [theo, sample]
    if env is not None:
        parts += [env.minimum, env.maximum]
    lo = min(float(np.min(p)) for p in parts)
    hi = max(float(np.max(p)) for p in parts)
    if hi == lo:
        lo, hi = lo - 0.5, hi + 0.5
    ax.set_xlim(lo, hi)
    ax.set_ylim(lo, hi)
    if env is not None:
        bands = env.bands()
        greys = style.envelope_greys
        for i, (_, lower, upper) in enumerate(bands):
            colour = greys[min(len(bands) - 1 - i, len(greys) - 1)]
            ax.fill_between(theo, lower, upper, color=colour, linewidth=0.0)
    _points(ax, theo, sample, style)
    ax.plot([lo, hi], [lo, hi], color=style.line_color, linewidth=0.5)


_DRAW = {"scatter": _scatter, "acf": _acf, "qq": _qq}


#############################
# 1D panels
#############################


def strip_spec(cell: Cell, grid: LayoutGrid) -> PanelSpec:
    """
    Panel spec of a 1D cell: an arrow along the move, or the names of its labels.
    """
    if cell.role == ARROW:
        return arrow_panel(cell.direction)
    return label_panel(tuple(grid.name(v) for v in cell.labels))


def _arrow(ax: Axes, direction: str, box: tuple, style: StyleConfig) -> None:
    # chevron in pixels around the centre, mapped to axes fractions
    _, _, w, h = box
    s = 0.35 * style.one_d
    shape = {
        "r": [(-s / 2, -s), (s / 2, 0), (-s / 2, s)],
        "l": [(s / 2, -s), (-s / 2, 0), (s / 2, s)],
        "d": [(-s, -s / 2), (0, s / 2), (s, -s / 2)],
        "u": [(-s, s / 2), (0, -s / 2), (s, s / 2)],
    }[direction]
    xs = [0.5 + dx / w for dx, _ in shape]
    ys = [0.5 - dy / h for _, dy in shape]
    ax.plot(xs, ys, color=style.line_color, linewidth=1.0, transform=ax.transAxes)


def _label(ax: Axes, x: float, y: float, content: str, vertical: bool, style: StyleConfig) -> None:
    ax.text(
        x,
        y,
        content,
        transform=ax.transAxes,
        rotation=90 if vertical else 0,
        ha="center",
        va="center",
        fontfamily=style.font_family,
        fontsize=style.font_size,
        color=style.line_color,
    )


def _strip(fig: Figure, cell: Cell, grid: LayoutGrid, box: tuple, style: StyleConfig) -> None:
    ax = _axes(fig, box)
    spec = strip_spec(cell, grid)
    if spec.kind == "arrow":
        _arrow(ax, spec.data["direction"], box, style)
        return
    names = spec.data["texts"]
    vertical = cell.vertical
    if cell.role == SEPARATOR:
        ax.patch.set_visible(True)
        ax.set_facecolor(style.separator_fill)
        spots = [(0.5, 0.75), (0.5, 0.25)] if vertical else [(0.25, 0.5), (0.75, 0.5)]
        for (sx, sy), name in zip(spots, names):
            _label(ax, sx, sy, name, vertical, style)
        return
    _label(ax, 0.5, 0.5, " ".join(names), vertical, style)


def render(
    grid: LayoutGrid,
    panels: Sequence[PanelSpec],
    style: Optional[StyleConfig] = None,
    stamp: Optional[str] = None,
) -> str:
    """
    Render a layout as a standalone SVG document.

    Parameters
    ----------
    grid : LayoutGrid
        Placed panels.
    panels : Sequence[PanelSpec]
        Content of every 2D panel, in display order.
    style : StyleConfig
        Global style, the defaults if omitted.
    stamp : str
        Provenance text written as the document description.

    Returns
    -------
    str
        SVG document.

    Raises
    ------
    RenderError
        If the panels do not match the 2D cells.
    """
    style = style or StyleConfig()
    cells = grid.panels()
    if len(panels) != len(cells):
        raise RenderError(f"Expected {len(cells)} panel specs, got {len(panels)}.")
    if not grid.cells:
        return _to_svg(_figure(2 * style.margin, 2 * style.margin, style), stamp)

    frame = _Frame(grid, style)
    fig = _figure(frame.width, frame.height, style)
    for cell, spec in zip(cells, panels):
        if spec.kind not in DATA_KINDS:
            raise RenderError(f"Panel {cell.index} needs a data panel, got {spec.kind!r}.")
        _DRAW[spec.kind](_axes(fig, frame.box(cell), style.panel_border), spec, style)
    for cell in grid.strips():
        _strip(fig, cell, grid, frame.box(cell), style)
    return _to_svg(fig, stamp)


def render_matrix(
    matrix: DependenceMatrix,
    sectors: Optional[SectorMap] = None,
    style: Optional[StyleConfig] = None,
    stamp: Optional[str] = None,
    size: float = 600.0,
) -> str:
    """
    Greyscale heatmap of a dependence matrix, darker for stronger dependence.

    Columns are grouped by sector when a sector map is given, with lines
    marking the sector boundaries. Signed measures map [-1, 1] onto the grey
    scale, failed pairs stay blank.
    """
    style = style or StyleConfig()
    d = matrix.d
    order = list(range(d))
    labels = None
    if sectors is not None:
        labels = sectors.labels(matrix.tickers)
        order = sorted(order, key=lambda k: (labels[k], k))
    side = max(1.0, size / max(d, 1)) * d
    m = style.margin
    fig = _figure(side + 2 * m, side + 2 * m, style)
    ax = _axes(fig, (m, m, side, side))

    vals = matrix.values[np.ix_(order, order)]
    if matrix.measure in SIGNED_MEASURES:
        vals = (vals + 1.0) / 2.0
    ax.pcolormesh(
        np.ma.masked_invalid(np.clip(vals, 0.0, 1.0)),
        cmap="gray_r",
        vmin=0.0,
        vmax=1.0,
        edgecolors="none",
        antialiased=False,
    )
    ax.set_xlim(0, d)
    ax.set_ylim(d, 0)

    if labels is not None:
        ordered = [labels[k] for k in order]
        for p in range(1, d):
            if ordered[p] != ordered[p - 1]:
                ax.axvline(p, color=style.band_color, linewidth=1.0)
                ax.axhline(p, color=style.band_color, linewidth=1.0)
    return _to_svg(fig, stamp)

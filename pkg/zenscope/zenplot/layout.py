"""
Zigzag layout engine.

2D panels sit on integer grid cells (row, col), rows growing downward. A 1D
panel lies on the gap between two neighbouring cells, so one of its
coordinates is a half-integer. Direction sequences move from one 2D panel to
the next: u and d change the row, l and r the column.
"""
from __future__ import annotations

from typing import Optional, Sequence

from zenscope.utils.exceptions import LayoutError
from zenscope.utils.logger import LOGGER
from zenscope.zenpath.objects import Zenpath

MOVES = {"u": (-1, 0), "d": (1, 0), "l": (0, -1), "r": (0, 1)}

# 1D roles
CONNECTOR = "connector"
SEPARATOR = "separator"
START = "start"
END = "end"
ARROW = "arrow"


class Cell:
    """
    Placed panel.

    Attributes
    ----------
    kind : str
        "2d" or "1d".
    row, col : float
        Grid position.
    group : int
        Group of the zenpath the panel belongs to.
    index : int | None
        Position of a 2D panel in display order.
    x, y : int | None
        Variates on the horizontal and vertical axes of a 2D panel.
    role : str | None
        Role of a 1D panel: connector, separator, start, end or arrow.
    labels : tuple
        Variates named by a 1D panel.
    direction : str | None
        Move an arrow panel points along.
    """

    def __init__(
        self,
        kind: str,
        row: float,
        col: float,
        group: int,
        index: Optional[int] = None,
        x: Optional[int] = None,
        y: Optional[int] = None,
        role: Optional[str] = None,
        labels: tuple = (),
        direction: Optional[str] = None,
    ) -> None:
        self.kind = kind
        self.row = row
        self.col = col
        self.group = group
        self.index = index
        self.x = x
        self.y = y
        self.role = role
        self.labels = tuple(labels)
        self.direction = direction

    @property
    def position(self) -> tuple[float, float]:
        return (self.row, self.col)

    @property
    def vertical(self) -> bool:
        """
        Whether a 1D panel is a vertical strip, i.e. sits between two columns.
        """
        return self.col != int(self.col)

    def variates(self) -> tuple:
        return tuple(v for v in (self.x, self.y) if v is not None)

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None and v != ()}

    def __repr__(self) -> str:
        return f"Cell({self.to_dict()})"


class LayoutGrid:
    """
    Placed 2D and 1D panels.

    Attributes
    ----------
    cells : list[Cell]
        2D panels in display order followed by 1D panels.
    names : list[str] | None
        Variate names used by labels.
    """

    def __init__(self, cells: Sequence[Cell], names: Optional[Sequence[str]] = None) -> None:
        self.cells = list(cells)
        self.names = list(names) if names is not None else None

    def panels(self) -> list[Cell]:
        """
        2D panels in display order.
        """
        return sorted((c for c in self.cells if c.kind == "2d"), key=lambda c: c.index)

    def strips(self) -> list[Cell]:
        """
        1D panels.
        """
        return [c for c in self.cells if c.kind == "1d"]

    def name(self, variate: int) -> str:
        if self.names is None:
            return str(variate)
        return self.names[variate]

    def bounding_box(self) -> tuple[float, float, float, float]:
        """
        (min row, min col, max row, max col) over all cells.
        """
        if not self.cells:
            return (0.0, 0.0, 0.0, 0.0)
        rows = [c.row for c in self.cells]
        cols = [c.col for c in self.cells]
        return (min(rows), min(cols), max(rows), max(cols))

    def __len__(self) -> int:
        return len(self.cells)


#############################
# Direction sequences
#############################


def check_directions(dirs: Sequence[str]) -> list[str]:
    """
    Validate a direction sequence.

    Raises
    ------
    LayoutError
        On a symbol other than u, d, l, r.
    """
    out = list(dirs)
    for k, step in enumerate(out, start=1):
        if step not in MOVES:
            raise LayoutError(f"Unknown direction {step!r}.", step=k)
    return out


def _to_directions(cells: list[tuple[int, int]]) -> list[str]:
    inverse = {v: k for k, v in MOVES.items()}
    return [inverse[(b[0] - a[0], b[1] - a[1])] for a, b in zip(cells, cells[1:])]


def default_zigzag(n2d: int, width: int = 10) -> list[str]:
    """
    Directions of the default zigzag.

    Panels fill two-row bands, alternately rightward and leftward. Within a
    band every column after the first receives a horizontal move followed by
    a switch of row, except a last column already reached on the lower row.
    At the end of a band the zigzag moves down and reverses. A band holds
    2 * width - 1 panels for even widths and 2 * width - 2 for odd widths, the
    last column of an odd band being reached on the lower row.

    Parameters
    ----------
    n2d : int
        Number of 2D panels, at least 1.
    width : int
        Maximal number of 2D columns, at least 2.

    Returns
    -------
    list[str]
        n2d - 1 directions.
    """
    if n2d < 1:
        raise LayoutError("At least one panel is needed.")
    if width < 2:
        raise LayoutError("Zigzag width must be at least 2.")
    cells = []
    band = 0
    while len(cells) < n2d:
        top = 2 * band
        cols = range(width) if band % 2 == 0 else range(width - 1, -1, -1)
        row = top
        for k, col in enumerate(cols):
            cells.append((row, col))
            if k > 0 and not (k == width - 1 and row == top + 1):
                row = top + 1 if row == top else top
                cells.append((row, col))
        band += 1
    return _to_directions(cells[:n2d])


def row_major_zigzag(n: int, width: int = 10) -> list[str]:
    """
    Single-row boustrophedon: r x (width - 1), d, l x (width - 1), d, ...

    Parameters
    ----------
    n : int
        Number of panels, at least 1.
    width : int
        Panels per row.

    Returns
    -------
    list[str]
        n - 1 directions.
    """
    if n < 1:
        raise LayoutError("At least one panel is needed.")
    if width < 1:
        raise LayoutError("Width must be positive.")
    out = []
    k = 0
    while len(out) < n - 1:
        out.append("d" if k % width == width - 1 else ("r" if (k // width) % 2 == 0 else "l"))
        k += 1
    return out


#############################
# Placement
#############################


def _place(dirs: list[str], start: tuple[int, int] = (0, 0)) -> list[tuple[int, int]]:
    pos = start
    cells = [pos]
    seen = {pos}
    for k, step in enumerate(dirs, start=1):
        dr, dc = MOVES[step]
        pos = (pos[0] + dr, pos[1] + dc)
        if pos in seen:
            raise LayoutError(f"Direction {step!r} at step {k} revisits cell {pos}.", step=k)
        seen.add(pos)
        cells.append(pos)
    min_r = min(r for r, _ in cells)
    min_c = min(c for _, c in cells)
    return [(r - min_r, c - min_c) for r, c in cells]


def _midpoint(a: tuple[int, int], b: tuple[int, int]) -> tuple[float, float]:
    return ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)


def _horizontal(step: Optional[str]) -> bool:
    return step in ("l", "r")


def _resolve_dirs(dirs: Optional[Sequence[str]], n: int, width: int) -> list[str]:
    dirs = default_zigzag(n, width) if dirs is None else check_directions(dirs)
    if len(dirs) != n - 1:
        raise LayoutError(f"Expected {n - 1} directions for {n} panels, got {len(dirs)}.")
    return dirs


def layout(
    path: Zenpath,
    dirs: Optional[Sequence[str]] = None,
    width: int = 10,
    names: Optional[Sequence[str]] = None,
) -> LayoutGrid:
    """
    Place the pairs of a zenpath.

    Each consecutive pair of a group becomes a 2D panel. A panel entered by a
    horizontal move keeps the shared variate on its vertical axis, one entered
    by a vertical move keeps it on its horizontal axis, and the first panel of
    a group is oriented by the move that leaves it. Neighbouring panels of a
    group are joined by a 1D connector naming the shared variate, neighbouring
    panels of different groups by a separator naming both boundary variates.
    The path starts and ends with a 1D label of its outer variates.

    Parameters
    ----------
    path : Zenpath
        Path to display.
    dirs : Sequence[str]
        Directions between consecutive panels, the default zigzag if omitted.
    width : int
        Maximal number of 2D columns of the default zigzag.
    names : Sequence[str]
        Variate names.

    Returns
    -------
    LayoutGrid
        Placed panels.

    Raises
    ------
    LayoutError
        On a direction count mismatch or a move onto an occupied cell.
    """
    panels = [(g, a, b) for g, grp in enumerate(path.groups) for a, b in zip(grp, grp[1:])]
    if not panels:
        return LayoutGrid([], names)
    dirs = _resolve_dirs(dirs, len(panels), width)
    spots = _place(dirs)

    cells = []
    for k, ((g, a, b), pos) in enumerate(zip(panels, spots)):
        if k > 0 and panels[k - 1][0] == g:
            shared, other, move = a, b, dirs[k - 1]
        elif k < len(dirs) and panels[k + 1][0] == g:
            shared, other, move = b, a, dirs[k]
        else:
            shared, other, move = a, b, None
        # Side by side panels share the vertical axis, stacked ones the horizontal
        x, y = (other, shared) if _horizontal(move) else (shared, other)
        cells.append(Cell("2d", pos[0], pos[1], g, index=k, x=x, y=y))

    taken = set()
    for k in range(len(panels) - 1):
        mid = _midpoint(spots[k], spots[k + 1])
        taken.add(mid)
        g0, _, b0 = panels[k]
        g1, a1, _ = panels[k + 1]
        if g0 == g1:
            cells.append(Cell("1d", mid[0], mid[1], g0, role=CONNECTOR, labels=(b0,)))
        else:
            cells.append(Cell("1d", mid[0], mid[1], g1, role=SEPARATOR, labels=(b0, a1)))

    first, last = cells[0], cells[len(panels) - 1]
    _outer_label(cells, taken, first, panels[0][1], START)
    _outer_label(cells, taken, last, panels[-1][2], END)
    return LayoutGrid(cells, names)


def _outer_label(cells: list[Cell], taken: set, panel: Cell, variate: int, role: str) -> None:
    """
    Attach a label beside the axis carrying a variate, on the first free side.
    """
    r, c = panel.row, panel.col
    if panel.y == variate:
        sides = [(r, c - 0.5), (r, c + 0.5)]
    else:
        sides = [(r + 0.5, c), (r - 0.5, c)]
    for spot in sides:
        if spot not in taken:
            taken.add(spot)
            cells.append(Cell("1d", spot[0], spot[1], panel.group, role=role, labels=(variate,)))
            return
    LOGGER.debug(f"No room for the {role} label of variate {variate}.")


def layout_sequence(
    n: int,
    dirs: Optional[Sequence[str]] = None,
    width: int = 10,
    names: Optional[Sequence[str]] = None,
    variates: Optional[Sequence[int]] = None,
) -> LayoutGrid:
    """
    Place single-variate panels joined by arrows, e.g. Q-Q or ACF plots.

    Parameters
    ----------
    n : int
        Number of panels.
    dirs : Sequence[str]
        Directions, the row-major zigzag if omitted.
    width : int
        Panels per row of the default directions.
    names : Sequence[str]
        Variate names.
    variates : Sequence[int]
        Variate shown by each panel, 0..n-1 by default.

    Returns
    -------
    LayoutGrid
        Placed panels.
    """
    if n == 0:
        return LayoutGrid([], names)
    variates = list(range(n)) if variates is None else list(variates)
    if len(variates) != n:
        raise LayoutError(f"Expected {n} variates, got {len(variates)}.")
    dirs = check_directions(row_major_zigzag(n, width) if dirs is None else dirs)
    if len(dirs) != n - 1:
        raise LayoutError(f"Expected {n - 1} directions for {n} panels, got {len(dirs)}.")
    spots = _place(dirs)
    cells = [Cell("2d", r, c, 0, index=k, x=variates[k]) for k, (r, c) in enumerate(spots)]
    for k, step in enumerate(dirs):
        mid = _midpoint(spots[k], spots[k + 1])
        cells.append(Cell("1d", mid[0], mid[1], 0, role=ARROW, direction=step))
    return LayoutGrid(cells, names)

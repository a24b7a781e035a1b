"""
Dataset readers and writers.
"""
from __future__ import annotations

from io import StringIO
from pathlib import Path

import numpy as np
import pandas as pd

from zenscope.dataset.objects import PriceMatrix, ReturnMatrix, SectorMap
from zenscope.utils.commons import MISSING_MARKERS
from zenscope.utils.exceptions import DataError
from zenscope.utils.io_utils import frame_to_csv, write_text

SECTOR_COLUMNS = ["ticker", "sector", "subsector"]


def _read_raw(path: str | Path) -> pd.DataFrame:
    """
    Read a CSV as a grid of strings. Leading ``#`` comment lines are skipped.
    """
    pth = Path(path)
    if not pth.is_file():
        raise DataError(f"File not found: {pth}")
    lines = pth.read_text(encoding="utf-8").splitlines()
    while lines and lines[0].startswith("#"):
        lines.pop(0)
    if not lines:
        raise DataError(f"{pth}: no observations")
    try:
        return pd.read_csv(StringIO("\n".join(lines)), header=None, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise DataError(f"{pth}: malformed CSV ({exc})") from exc


def load_prices(path: str | Path) -> PriceMatrix:
    """
    Load a price CSV with header ``date,<ticker1>,...``.

    Empty cells and the literal ``NA`` are missing prices. Rows are numbered
    from 1 starting at the first data row.

    Parameters
    ----------
    path : str | Path
        Path of the CSV file.

    Returns
    -------
    PriceMatrix
        Parsed prices.

    Raises
    ------
    DataError
        On unparseable cells, duplicate tickers, non increasing dates or
        files without observations.
    """
    raw = _read_raw(path)
    if raw.isna().to_numpy().any():
        row = int(np.flatnonzero(raw.isna().to_numpy().any(axis=1))[0])
        raise DataError(f"{path}: row {row} has fewer fields than the header.")
    header = list(raw.iloc[0])
    tickers = [str(t).strip() for t in header[1:]]
    if len(raw) < 2:
        raise DataError(f"{path}: no observations")
    if not tickers:
        raise DataError(f"{path}: no ticker columns")
    body = raw.iloc[1:].reset_index(drop=True)
    dates = [str(d).strip() for d in body.iloc[:, 0]]
    cells = body.iloc[:, 1:]

    values = np.empty(cells.shape, dtype=float)
    for col, tck in enumerate(tickers):
        column = cells.iloc[:, col].str.strip()
        missing = column.isin(MISSING_MARKERS).to_numpy()
        parsed = pd.to_numeric(column.where(~missing), errors="coerce").to_numpy(dtype=float)
        bad = np.flatnonzero(~missing & ~np.isfinite(parsed))
        if bad.size:
            row = int(bad[0]) + 1
            raise DataError(f"{path}: unparseable cell {column.iloc[bad[0]]!r} at row {row}, column {tck!r}")
        values[:, col] = np.where(missing, np.nan, parsed)
    try:
        return PriceMatrix(dates, tickers, values)
    except DataError as exc:
        raise DataError(f"{path}: {exc}") from exc


def load_sectors(path: str | Path) -> SectorMap:
    """
    Load a sector CSV with header ``ticker,sector,subsector``.

    Parameters
    ----------
    path : str | Path
        Path of the CSV file.

    Returns
    -------
    SectorMap
        Parsed classification.
    """
    raw = _read_raw(path)
    header = [str(h).strip() for h in raw.iloc[0]]
    if header[:3] != SECTOR_COLUMNS:
        raise DataError(f"{path}: sector header must start with {','.join(SECTOR_COLUMNS)}")
    mapping = {}
    for row, rec in enumerate(raw.iloc[1:, :3].itertuples(index=False), start=1):
        tck, sector, subsector = (str(i).strip() for i in rec)
        if not tck or not sector:
            raise DataError(f"{path}: empty ticker or sector at row {row}")
        if tck in mapping:
            raise DataError(f"{path}: duplicate ticker {tck!r}")
        mapping[tck] = (sector, subsector)
    return SectorMap(mapping)


def prices_to_csv(prices: PriceMatrix) -> str:
    """
    Render prices as CSV text, missing prices as ``NA``.
    """
    buff = StringIO()
    prices.to_frame().to_csv(buff, index_label="date", na_rep="NA", float_format="%.17g", lineterminator="\n")
    return buff.getvalue()


def write_prices(prices: PriceMatrix, path: str | Path) -> None:
    """
    Write prices in the input format.
    """
    write_text(prices_to_csv(prices), Path(path))


def write_returns(returns: ReturnMatrix, path: str | Path) -> None:
    """
    Write returns with the input header.
    """
    write_text(frame_to_csv(returns.to_frame()), Path(path))


def write_sectors(sectors: SectorMap, path: str | Path) -> None:
    """
    Write a sector map in the input format.
    """
    write_text(frame_to_csv(sectors.to_frame(), index_label="ticker"), Path(path))

"""
Dataset objects module.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
import pandas as pd

from zenscope.utils.exceptions import DataError


def _parse_dates(dates: Sequence[str]) -> pd.DatetimeIndex:
    try:
        return pd.DatetimeIndex(pd.to_datetime(pd.Series(list(dates), dtype=str), format="ISO8601"))
    except (ValueError, TypeError) as exc:
        raise DataError(f"Dates must be ISO-8601: {exc}") from exc


def _check_dates(dates: Sequence[str]) -> None:
    parsed = _parse_dates(dates)
    steps = np.diff(parsed.values.astype("int64"))
    bad = np.flatnonzero(steps <= 0)
    if bad.size:
        row = int(bad[0]) + 2
        raise DataError(f"Dates not strictly increasing at row {row} ({dates[row - 1]}).")


def _check_tickers(tickers: Sequence[str]) -> None:
    seen = set()
    for tck in tickers:
        if not tck:
            raise DataError("Empty ticker in header.")
        if tck in seen:
            raise DataError(f"Duplicate ticker {tck!r}.")
        seen.add(tck)


class PriceMatrix:
    """
    Grid of positive prices with missing markers (NaN).

    Attributes
    ----------
    dates : list[str]
        ISO-8601 dates, strictly increasing.
    tickers : list[str]
        Unique column identifiers.
    values : np.ndarray
        Prices, shape (len(dates), len(tickers)). NaN marks a missing price.
    """

    def __init__(self, dates: Sequence[str], tickers: Sequence[str], values: np.ndarray) -> None:
        """
        Constructor.
        """
        self.dates = [str(i) for i in dates]
        self.tickers = [str(i) for i in tickers]
        self.values = np.array(values, dtype=float)
        if self.values.ndim != 2 or self.values.shape != (len(self.dates), len(self.tickers)):
            raise DataError(
                f"Price grid shape {self.values.shape} does not match {len(self.dates)} dates "
                f"and {len(self.tickers)} tickers."
            )
        _check_tickers(self.tickers)
        _check_dates(self.dates)
        present = self.values[~np.isnan(self.values)]
        if np.any(~np.isfinite(present)) or np.any(present <= 0):
            raise DataError("Prices must be finite and strictly positive.")

    @property
    def shape(self) -> tuple:
        return self.values.shape

    def missing_fraction(self) -> np.ndarray:
        """
        Fraction of missing prices per column.
        """
        if not self.dates:
            return np.zeros(len(self.tickers))
        return np.isnan(self.values).mean(axis=0)

    def has_missing(self) -> bool:
        return bool(np.isnan(self.values).any())

    def select(self, columns: Iterable[int]) -> PriceMatrix:
        """
        Sub-matrix with the given column positions, order preserved.
        """
        idx = list(columns)
        return PriceMatrix(self.dates, [self.tickers[i] for i in idx], self.values[:, idx])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, index=pd.Index(self.dates, name="date"), columns=self.tickers)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> PriceMatrix:
        return cls(list(frame.index.astype(str)), list(frame.columns.astype(str)), frame.to_numpy(dtype=float))

    def __repr__(self) -> str:
        return f"PriceMatrix(rows={len(self.dates)}, columns={len(self.tickers)})"


class ReturnMatrix:
    """
    Grid of negative log-returns without missing values.

    Attributes
    ----------
    dates : list[str]
        Dates of the returns (the later date of each price pair).
    tickers : list[str]
        Column identifiers.
    values : np.ndarray
        Returns, shape (len(dates), len(tickers)).
    """

    def __init__(self, dates: Sequence[str], tickers: Sequence[str], values: np.ndarray) -> None:
        """
        Constructor.
        """
        self.dates = [str(i) for i in dates]
        self.tickers = [str(i) for i in tickers]
        self.values = np.array(values, dtype=float)
        if self.values.ndim != 2 or self.values.shape != (len(self.dates), len(self.tickers)):
            raise DataError("Return grid shape does not match dates and tickers.")
        _check_tickers(self.tickers)
        if not np.all(np.isfinite(self.values)):
            raise DataError("Returns must be finite and complete.")

    @property
    def shape(self) -> tuple:
        return self.values.shape

    def column(self, ticker: str) -> np.ndarray:
        try:
            return self.values[:, self.tickers.index(ticker)]
        except ValueError as exc:
            raise DataError(f"Unknown ticker {ticker!r}.") from exc

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, index=pd.Index(self.dates, name="date"), columns=self.tickers)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> ReturnMatrix:
        return cls(list(frame.index.astype(str)), list(frame.columns.astype(str)), frame.to_numpy(dtype=float))

    def __repr__(self) -> str:
        return f"ReturnMatrix(rows={len(self.dates)}, columns={len(self.tickers)})"


class SectorMap:
    """
    Ticker to (sector, subsector) classification.
    """

    def __init__(self, mapping: dict[str, tuple[str, str]]) -> None:
        """
        Constructor.

        Parameters
        ----------
        mapping : dict[str, tuple[str, str]]
            Ticker to (sector, subsector).
        """
        self._mapping = {str(k): (str(v[0]), str(v[1])) for k, v in mapping.items()}

    def __contains__(self, ticker: str) -> bool:
        return ticker in self._mapping

    def __len__(self) -> int:
        return len(self._mapping)

    def sector(self, ticker: str) -> str:
        """
        Sector of a ticker.

        Raises
        ------
        DataError
            If the ticker is not mapped.
        """
        try:
            return self._mapping[ticker][0]
        except KeyError as exc:
            raise DataError(f"Ticker {ticker!r} has no sector.") from exc

    def subsector(self, ticker: str) -> str:
        try:
            return self._mapping[ticker][1]
        except KeyError as exc:
            raise DataError(f"Ticker {ticker!r} has no sector.") from exc

    def sectors(self) -> list[str]:
        """
        Sector names in lexicographic order.
        """
        return sorted({v[0] for v in self._mapping.values()})

    def labels(self, tickers: Sequence[str]) -> list[str]:
        """
        Sector of each ticker, in order.
        """
        return [self.sector(t) for t in tickers]

    def restrict(self, tickers: Sequence[str]) -> SectorMap:
        """
        Map restricted to the given tickers.

        Raises
        ------
        DataError
            If a ticker is not mapped.
        """
        missing = [t for t in tickers if t not in self._mapping]
        if missing:
            raise DataError(f"Tickers without sector: {', '.join(missing)}.")
        return SectorMap({t: self._mapping[t] for t in tickers})

    def to_frame(self) -> pd.DataFrame:
        rows = [(t, s, ss) for t, (s, ss) in self._mapping.items()]
        return pd.DataFrame(rows, columns=["ticker", "sector", "subsector"]).set_index("ticker")

    def items(self) -> list[tuple[str, tuple[str, str]]]:
        return list(self._mapping.items())

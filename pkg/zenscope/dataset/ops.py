"""
Dataset operations module.
"""
from __future__ import annotations

import numpy as np

from zenscope.dataset.objects import PriceMatrix, ReturnMatrix
from zenscope.utils.exceptions import DataError
from zenscope.utils.logger import LOGGER


def filter_by_completeness(prices: PriceMatrix, max_missing_frac: float) -> PriceMatrix:
    """
    Keep the columns whose missing fraction does not exceed the threshold.

    Parameters
    ----------
    prices : PriceMatrix
        Input prices.
    max_missing_frac : float
        Largest admitted fraction of missing prices, in [0, 1].

    Returns
    -------
    PriceMatrix
        Retained columns in their original order.

    Raises
    ------
    DataError
        If the threshold is out of range or no column remains.
    """
    if not 0.0 <= max_missing_frac <= 1.0:
        raise DataError(f"Missing fraction threshold must lie in [0, 1], got {max_missing_frac}.")
    frac = prices.missing_fraction()
    keep = [j for j, f in enumerate(frac) if f <= max_missing_frac]
    if not keep:
        raise DataError("no columns remain")
    dropped = len(prices.tickers) - len(keep)
    if dropped:
        LOGGER.info(f"Dropped {dropped} of {len(prices.tickers)} columns above {max_missing_frac:.0%} missing.")
    return prices.select(keep)


def fill_missing(prices: PriceMatrix) -> PriceMatrix:
    """
    Fill missing prices column by column.

    Interior gaps are linearly interpolated in row index between the nearest
    present neighbours, leading gaps take the first present value and trailing
    gaps the last one. Present values are never changed.

    Parameters
    ----------
    prices : PriceMatrix
        Input prices.

    Returns
    -------
    PriceMatrix
        Prices without missing values.

    Raises
    ------
    DataError
        If a column has no present value.
    """
    values = prices.values.copy()
    index = np.arange(values.shape[0], dtype=float)
    for j, tck in enumerate(prices.tickers):
        col = values[:, j]
        present = ~np.isnan(col)
        if not present.any():
            raise DataError(f"Column {tck!r} is entirely missing.")
        if present.all():
            continue
        # np.interp repeats the end values outside the present range
        col[~present] = np.interp(index[~present], index[present], col[present])
    return PriceMatrix(prices.dates, prices.tickers, values)


def neg_log_returns(prices: PriceMatrix) -> ReturnMatrix:
    """
    Negative log-returns, X_t = -log(S_t / S_{t-1}).

    Parameters
    ----------
    prices : PriceMatrix
        Complete prices.

    Returns
    -------
    ReturnMatrix
        One row less than the prices.

    Raises
    ------
    DataError
        If prices are missing or fewer than two rows are given.
    """
    if prices.has_missing():
        raise DataError("Prices contain missing values, fill them first.")
    if len(prices.dates) < 2:
        raise DataError("At least two price rows are needed.")
    logp = np.log(prices.values)
    return ReturnMatrix(prices.dates[1:], prices.tickers, -np.diff(logp, axis=0))


def reconstruct_prices(returns: ReturnMatrix, first_date: str, initial: np.ndarray | float = 100.0) -> PriceMatrix:
    """
    Rebuild prices from negative log-returns by exponential cumulative sum.

    Parameters
    ----------
    returns : ReturnMatrix
        Negative log-returns.
    first_date : str
        Date of the initial prices, the returns start one row later.
    initial : np.ndarray | float
        Prices of the first row.

    Returns
    -------
    PriceMatrix
        Prices, one row more than the returns.
    """
    start = np.broadcast_to(np.asarray(initial, dtype=float), (len(returns.tickers),))
    logp = np.vstack([np.log(start), np.log(start) - np.cumsum(returns.values, axis=0)])
    return PriceMatrix([first_date] + returns.dates, returns.tickers, np.exp(logp))

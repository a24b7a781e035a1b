"""
Pseudo-observations and rank concordance measures.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
import pandas as pd
from scipy import stats

from zenscope.utils.exceptions import DependenceError


class PseudoObsMatrix:
    """
    Columnwise scaled ranks in the open unit interval.

    Attributes
    ----------
    values : np.ndarray
        Pseudo-observations, shape (T, d).
    tickers : list[str]
        Column identifiers.
    dates : list[str]
        Row labels, if known.
    """

    def __init__(self, values: np.ndarray, tickers: Sequence[str], dates: Sequence[str] | None = None) -> None:
        """
        Constructor.
        """
        self.values = np.array(values, dtype=float)
        self.tickers = [str(t) for t in tickers]
        self.dates = [str(d) for d in dates] if dates is not None else [str(i) for i in range(len(self.values))]
        if self.values.ndim != 2 or self.values.shape[1] != len(self.tickers):
            raise DependenceError("Pseudo-observation grid does not match tickers.")
        if np.any(~((self.values > 0) & (self.values < 1))):
            raise DependenceError("Pseudo-observations must lie in (0, 1).")

    @property
    def shape(self) -> tuple:
        return self.values.shape

    @property
    def d(self) -> int:
        return self.values.shape[1]

    def pair(self, i: int, j: int) -> np.ndarray:
        """
        Two columns as a (T, 2) array.
        """
        return self.values[:, [i, j]]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, index=pd.Index(self.dates, name="date"), columns=self.tickers)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> PseudoObsMatrix:
        return cls(frame.to_numpy(dtype=float), list(frame.columns.astype(str)), list(frame.index.astype(str)))


def pseudo_observations(
    z: np.ndarray,
    tickers: Sequence[str] | None = None,
    dates: Sequence[str] | None = None,
) -> PseudoObsMatrix:
    """
    Columnwise average ranks divided by T + 1.

    Parameters
    ----------
    z : np.ndarray
        Residual matrix, shape (T, d).
    tickers : Sequence[str]
        Column names, defaults to the column positions.
    dates : Sequence[str]
        Row labels.

    Returns
    -------
    PseudoObsMatrix
        Pseudo-observations.
    """
    if isinstance(z, pd.DataFrame):
        tickers = list(z.columns.astype(str)) if tickers is None else tickers
        dates = list(z.index.astype(str)) if dates is None else dates
    mat = np.asarray(z, dtype=float)
    if mat.ndim == 1:
        mat = mat[:, None]
    if mat.shape[0] < 2:
        raise DependenceError("At least two observations are needed.")
    if tickers is None:
        tickers = [str(j) for j in range(mat.shape[1])]
    ranks = stats.rankdata(mat, method="average", axis=0)
    return PseudoObsMatrix(ranks / (mat.shape[0] + 1.0), tickers, dates)


def _check_pair(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    u = np.asarray(u, dtype=float).ravel()
    v = np.asarray(v, dtype=float).ravel()
    if u.size != v.size:
        raise DependenceError(f"Series lengths differ ({u.size} and {v.size}).")
    if u.size < 2:
        raise DependenceError("At least two observations are needed.")
    return u, v


def _tie_pairs(sorted_values: np.ndarray) -> int:
    """
    Number of tied pairs in a sorted array.
    """
    _, counts = np.unique(sorted_values, return_counts=True)
    return int(np.sum(counts * (counts - 1) // 2))


def _count_swaps(values: np.ndarray) -> int:
    """
    Number of inversions, counted by a bottom-up merge sort.
    """
    arr = values.copy()
    buf = np.empty_like(arr)
    n = arr.size
    swaps = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if arr[j] < arr[i]:
                    buf[k] = arr[j]
                    swaps += mid - i
                    j += 1
                else:
                    buf[k] = arr[i]
                    i += 1
                k += 1
            buf[k : k + mid - i] = arr[i:mid]
            k += mid - i
            buf[k : k + hi - j] = arr[j:hi]
        arr, buf = buf, arr
        width *= 2
    return swaps


def kendall_tau(u: np.ndarray, v: np.ndarray) -> float:
    """
    Kendall's tau-b with tie correction, in O(n log n).

    Parameters
    ----------
    u, v : np.ndarray
        Series of equal length, at least 2.

    Returns
    -------
    float
        Tau-b in [-1, 1].

    Raises
    ------
    DependenceError
        If a series is constant or the lengths differ.
    """
    u, v = _check_pair(u, v)
    n = u.size
    order = np.lexsort((v, u))
    us, vs = u[order], v[order]

    n0 = n * (n - 1) // 2
    n1 = _tie_pairs(us)
    n2 = _tie_pairs(v)
    # Pairs tied in both coordinates
    n3 = 0
    start = 0
    for k in range(1, n + 1):
        if k == n or us[k] != us[start] or vs[k] != vs[start]:
            run = k - start
            n3 += run * (run - 1) // 2
            start = k
    swaps = _count_swaps(vs)
    denom = (n0 - n1) * (n0 - n2)
    if denom == 0:
        raise DependenceError("Kendall's tau is undefined for a constant series.")
    return (n0 - n1 - n2 + n3 - 2 * swaps) / math.sqrt(denom)


def spearman_rho(u: np.ndarray, v: np.ndarray) -> float:
    """
    Spearman's rho, the Pearson correlation of average ranks.

    Raises
    ------
    DependenceError
        If a series is constant or the lengths differ.
    """
    u, v = _check_pair(u, v)
    ru = stats.rankdata(u)
    rv = stats.rankdata(v)
    if np.ptp(ru) == 0 or np.ptp(rv) == 0:
        raise DependenceError("Spearman's rho is undefined for a constant series.")
    return float(np.corrcoef(ru, rv)[0, 1])

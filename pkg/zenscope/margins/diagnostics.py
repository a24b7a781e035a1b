"""
Serial dependence and marginal fit diagnostics.
"""
from __future__ import annotations

import numpy as np
from scipy import stats
from statsmodels.tsa.stattools import acf as _sm_acf

from zenscope.dependence.distributions import scaled_t_cdf
from zenscope.margins.objects import AcfResult, DiagnosticScore
from zenscope.utils.commons import PROB_EPS
from zenscope.utils.exceptions import FitError

#############################
# Autocorrelation
#############################


def acf(x: np.ndarray, max_lag: int) -> AcfResult:
    """
    Sample autocorrelation function.

    The lag k value is the biased autocovariance at lag k divided by the
    variance.

    Parameters
    ----------
    x : np.ndarray
        Series.
    max_lag : int
        Largest lag, smaller than the series length.

    Returns
    -------
    AcfResult
        Autocorrelations at lags 0..max_lag and the 1.96 / sqrt(n) band.

    Raises
    ------
    FitError
        If the series is constant or too short for the lag.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if max_lag < 1 or max_lag >= n:
        raise FitError(f"max_lag must lie in [1, {n - 1}], got {max_lag}.")
    if np.ptp(x) == 0:
        raise FitError("Autocorrelation of a constant series is undefined.")
    values = _sm_acf(x, nlags=max_lag, adjusted=False, fft=True)
    return AcfResult(values, 1.96 / np.sqrt(n), n)


def ljung_box_from_acf(values: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Ljung-Box statistics and p-values for every lag 1..len(values) - 1.

    Parameters
    ----------
    values : np.ndarray
        Autocorrelations starting at lag 0.
    n : int
        Series length.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        Q statistics and chi-square upper tail p-values, lag 1 first.
    """
    rho = np.asarray(values, dtype=float)[1:]
    lags = np.arange(1, rho.size + 1)
    q = n * (n + 2.0) * np.cumsum(rho**2 / (n - lags))
    return q, stats.chi2.sf(q, lags)


def ljung_box(x: np.ndarray, lag: int, column: int | None = None) -> DiagnosticScore:
    """
    Ljung-Box portmanteau test up to a given lag.

    Raises
    ------
    FitError
        If the lag is not positive or not smaller than the series length.
    """
    if lag < 1:
        raise FitError(f"Ljung-Box lag must be positive, got {lag}.")
    res = acf(x, lag)
    q, p = ljung_box_from_acf(res.values, res.n)
    return DiagnosticScore(column, q[-1], p[-1], lag=lag)


def serial_dependence_order(
    residuals: np.ndarray,
    max_lag: int = 30,
    squared: bool = False,
    tickers: list[str] | None = None,
) -> list[DiagnosticScore]:
    """
    Order columns by their evidence of serial dependence.

    Each column is scored by the smallest Ljung-Box p-value over the lags
    1..max_lag. Columns come out by ascending score, ties by column index.

    Parameters
    ----------
    residuals : np.ndarray
        Residual matrix, shape (T, d).
    max_lag : int
        Largest lag tested.
    squared : bool
        Test the squared residuals.
    tickers : list[str]
        Optional column names.

    Returns
    -------
    list[DiagnosticScore]
        One score per column, the lag field holds the minimizing lag.
    """
    if max_lag < 1:
        raise FitError(f"max_lag must be positive, got {max_lag}.")
    mat = np.asarray(residuals, dtype=float)
    if mat.ndim == 1:
        mat = mat[:, None]
    scores = []
    for j in range(mat.shape[1]):
        col = mat[:, j] ** 2 if squared else mat[:, j]
        name = tickers[j] if tickers else None
        try:
            res = acf(col, max_lag)
        except FitError as exc:
            raise FitError(f"Column {name or j}: {exc}") from exc
        q, p = ljung_box_from_acf(res.values, res.n)
        k = int(np.argmin(p))
        scores.append(DiagnosticScore(j, q[k], p[k], lag=k + 1, ticker=name))
    return sorted(scores, key=lambda s: (s.p_value, s.column))


#############################
# Anderson-Darling
#############################


def ad_statistic(probs: np.ndarray) -> float:
    """
    Anderson-Darling statistic of probability integral transforms.

    Probabilities are clamped to [1e-16, 1 - 1e-16] so the statistic is
    always finite.
    """
    u = np.sort(np.clip(np.asarray(probs, dtype=float).ravel(), PROB_EPS, 1.0 - PROB_EPS))
    n = u.size
    if n == 0:
        raise FitError("Anderson-Darling statistic of an empty sample.")
    i = np.arange(1, n + 1)
    return float(-n - np.sum((2 * i - 1) * (np.log(u) + np.log1p(-u[::-1]))) / n)


def _ad_inf(z: float) -> float:
    # Asymptotic null distribution function of A^2
    if z < 2:
        return (
            np.exp(-1.2337141 / z)
            / np.sqrt(z)
            * (2.00012 + (0.247105 - (0.0649821 - (0.0347962 - (0.011672 - 0.00168691 * z) * z) * z) * z) * z)
        )
    return np.exp(-np.exp(1.0776 - (2.30695 - (0.43424 - (0.082433 - (0.008056 - 0.0003146 * z) * z) * z) * z) * z))


def _ad_errfix(n: int, x: float) -> float:
    # Finite sample correction of the asymptotic distribution function
    if x > 0.8:
        return (-130.2137 + (745.2337 - (1705.091 - (1950.646 - (1116.360 - 255.7844 * x) * x) * x) * x) * x) / n
    c = 0.01265 + 0.1757 / n
    if x < c:
        t = x / c
        t = np.sqrt(t) * (1.0 - t) * (49.0 * t - 102.0)
        return t * (0.0037 / n**2 + 0.00078 / n + 0.00006) / n
    t = (x - c) / (0.8 - c)
    t = -0.00022633 + (6.54034 - (14.6538 - (14.458 - (8.259 - 1.91864 * t) * t) * t) * t) * t
    return t * (0.04213 / n + 0.01365 / n**2) / n


def ad_pvalue(a2: float, n: int) -> float:
    """
    Upper tail probability of the Anderson-Darling statistic for a fully
    specified null distribution and sample size n.
    """
    if not a2 > 0:
        return 1.0
    x = _ad_inf(a2)
    return float(np.clip(1.0 - (x + _ad_errfix(n, x)), 0.0, 1.0))


def ad_t_statistic(
    residuals: np.ndarray,
    nu_hat: float,
    column: int | None = None,
    ticker: str | None = None,
) -> DiagnosticScore:
    """
    Anderson-Darling test of residuals against the unit variance t distribution.

    Parameters
    ----------
    residuals : np.ndarray
        Standardized residuals.
    nu_hat : float
        Degrees of freedom, greater than 2.
    column : int
        Optional column index stored in the score.
    ticker : str
        Optional column name stored in the score.

    Returns
    -------
    DiagnosticScore
        Statistic and p-value.
    """
    if not nu_hat > 2:
        raise FitError(f"Degrees of freedom must exceed 2, got {nu_hat}.")
    x = np.asarray(residuals, dtype=float)
    a2 = ad_statistic(scaled_t_cdf(x, nu_hat))
    return DiagnosticScore(column, a2, ad_pvalue(a2, x.size), ticker=ticker)


def marginal_order(
    residuals: np.ndarray,
    nus: list[float],
    tickers: list[str] | None = None,
) -> list[DiagnosticScore]:
    """
    Order columns by decreasing Anderson-Darling statistic, ties by column index.
    """
    mat = np.asarray(residuals, dtype=float)
    if mat.ndim == 1:
        mat = mat[:, None]
    if len(nus) != mat.shape[1]:
        raise FitError(f"Expected {mat.shape[1]} degrees of freedom, got {len(nus)}.")
    scores = [
        ad_t_statistic(mat[:, j], nus[j], column=j, ticker=tickers[j] if tickers else None)
        for j in range(mat.shape[1])
    ]
    return sorted(scores, key=lambda s: (-s.statistic, s.column))

"""
Synthetic market generator.

Prices come from a block correlated t copula coupling ARMA(1,1)-GARCH(1,1)
margins with scaled t innovations. Columns of a sector share a higher
correlation than columns of different sectors.
"""
from __future__ import annotations

import numpy as np
import pandas as pd

from zenscope.dataset.objects import PriceMatrix, ReturnMatrix, SectorMap
from zenscope.dataset.ops import reconstruct_prices
from zenscope.dependence.copula import simulate_t_copula
from zenscope.dependence.distributions import scaled_t_quantile
from zenscope.margins.garch import simulate_arma_garch
from zenscope.utils.exceptions import DataError
from zenscope.utils.logger import LOGGER

FIRST_DATE = "2010-01-04"
INITIAL_PRICE = 100.0
BURN = 500


def block_correlation(labels: list[int], within: float, cross: float) -> np.ndarray:
    """
    Correlation matrix with ``within`` inside a block and ``cross`` between blocks.

    Raises
    ------
    DataError
        If the matrix is not positive definite.
    """
    lab = np.asarray(labels)
    P = np.where(lab[:, None] == lab[None, :], within, cross).astype(float)
    np.fill_diagonal(P, 1.0)
    if np.linalg.eigvalsh(P).min() <= 0:
        raise DataError(f"Block correlation within={within}, cross={cross} is not positive definite.")
    return P


def _margin_params(d: int, rng: np.random.Generator) -> tuple:
    mu = rng.uniform(-4e-4, 0.0, d)
    phi = rng.uniform(-0.1, 0.1, d)
    theta = rng.uniform(-0.1, 0.1, d)
    alpha0 = rng.uniform(1e-6, 4e-6, d)
    alpha1 = rng.uniform(0.04, 0.12, d)
    beta = rng.uniform(0.82, 0.9, d)
    nu = rng.uniform(4.5, 9.0, d)
    return (mu, phi, theta, alpha0, alpha1, beta, nu)


def _knock_out(values: np.ndarray, rng: np.random.Generator, gap_frac: float, n_incomplete: int) -> np.ndarray:
    """
    Remove prices: leading gaps for a share of columns and heavy losses for a few.
    """
    n, d = values.shape
    out = values.copy()
    n_incomplete = min(n_incomplete, d)
    heavy = rng.choice(d, size=n_incomplete, replace=False) if n_incomplete else np.array([], dtype=int)
    rest = np.setdiff1d(np.arange(d), heavy)
    n_gap = int(round(gap_frac * rest.size))
    gapped = rng.choice(rest, size=n_gap, replace=False) if n_gap else np.array([], dtype=int)
    for j in gapped:
        out[: int(rng.integers(1, max(2, n // 20))), j] = np.nan
    for j in heavy:
        lost = rng.choice(np.arange(1, n), size=int(0.4 * n), replace=False)
        out[lost, j] = np.nan
    return out


def synthetic_market(
    d: int = 10,
    n_obs: int = 756,
    n_sectors: int = 3,
    seed: int = 0,
    within: float = 0.6,
    cross: float = 0.25,
    nu: float = 6.0,
    gap_frac: float = 0.0,
    n_incomplete: int = 0,
) -> tuple[PriceMatrix, SectorMap]:
    """
    Simulate a price panel with sector labels.

    Parameters
    ----------
    d : int
        Number of columns, at least 2.
    n_obs : int
        Number of price rows, at least 2.
    n_sectors : int
        Number of sectors, between 1 and d. Columns are dealt to sectors in turn.
    seed : int
        Seed of the generator, equal seeds give equal markets.
    within : float
        Copula correlation inside a sector.
    cross : float
        Copula correlation between sectors.
    nu : float
        Degrees of freedom of the copula.
    gap_frac : float
        Share of the columns starting with a few missing prices.
    n_incomplete : int
        Number of columns losing 40% of their prices.

    Returns
    -------
    tuple[PriceMatrix, SectorMap]
        Prices and the sector of every ticker.

    Raises
    ------
    DataError
        On invalid sizes or correlations.
    """
    if d < 2 or n_obs < 2:
        raise DataError("A synthetic market needs at least 2 columns and 2 rows.")
    if not 1 <= n_sectors <= d:
        raise DataError(f"Number of sectors must lie in [1, {d}], got {n_sectors}.")
    if not 0.0 <= gap_frac <= 1.0:
        raise DataError("Leading gap fraction must lie in [0, 1].")

    rng = np.random.default_rng(seed)
    labels = [j % n_sectors for j in range(d)]
    P = block_correlation(labels, within, cross)
    params = _margin_params(d, rng)

    n_ret = n_obs - 1
    U = simulate_t_copula(P, nu, BURN + n_ret, rng)
    z = np.column_stack([scaled_t_quantile(U[:, j], float(params[6][j])) for j in range(d)])
    x = simulate_arma_garch(params, n_ret, rng, burn=BURN, innovations=z)

    tickers = [f"S{j + 1:03d}" for j in range(d)]
    dates = [ts.strftime("%Y-%m-%d") for ts in pd.bdate_range(FIRST_DATE, periods=n_obs)]
    prices = reconstruct_prices(ReturnMatrix(dates[1:], tickers, x), dates[0], INITIAL_PRICE)
    values = _knock_out(prices.values, rng, gap_frac, n_incomplete)

    mapping = {}
    for j, tck in enumerate(tickers):
        sector = f"{labels[j] + 1:02d}"
        mapping[tck] = (f"Sector {sector}", f"Industry {sector}{'ab'[(j // n_sectors) % 2]}")
    sectors = SectorMap(mapping)
    LOGGER.info(f"Synthetic market: {d} columns, {n_obs} rows, {n_sectors} sectors.")
    return PriceMatrix(dates, tickers, values), sectors

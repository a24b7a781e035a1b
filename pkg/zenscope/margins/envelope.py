"""
Q-Q plot support: theoretical quantiles and simulated envelopes.
"""
from __future__ import annotations

import numpy as np

from zenscope.dependence.distributions import scaled_t_quantile
from zenscope.margins.objects import QQEnvelope
from zenscope.utils.exceptions import FitError

DEFAULT_LEVELS = (0.90, 0.95, 0.99)


def qq_points(sample: np.ndarray, nu_hat: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Theoretical scaled t quantiles at plotting positions (i - 0.5) / n and the
    sorted sample.

    Parameters
    ----------
    sample : np.ndarray
        Observations.
    nu_hat : float
        Degrees of freedom, greater than 2.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        Theoretical quantiles and ordered sample.
    """
    x = np.sort(np.asarray(sample, dtype=float))
    n = x.size
    if n == 0:
        raise FitError("Q-Q points of an empty sample.")
    probs = (np.arange(1, n + 1) - 0.5) / n
    return np.asarray(scaled_t_quantile(probs, nu_hat), dtype=float), x


def qq_envelope(
    nu_hat: float,
    n: int,
    nsim: int = 1000,
    levels: tuple = DEFAULT_LEVELS,
    seed: int = 0,
) -> QQEnvelope:
    """
    Pointwise envelopes of the order statistics of scaled t samples.

    Parameters
    ----------
    nu_hat : float
        Degrees of freedom, greater than 2.
    n : int
        Sample size.
    nsim : int
        Number of simulated samples, at least 100.
    levels : tuple
        Central coverage fractions in (0, 1).
    seed : int
        Random seed.

    Returns
    -------
    QQEnvelope
        Bands per level plus the simulated range.

    Raises
    ------
    FitError
        On invalid arguments.
    """
    if nsim < 100:
        raise FitError(f"At least 100 simulations are needed, got {nsim}.")
    if not nu_hat > 2:
        raise FitError(f"Degrees of freedom must exceed 2, got {nu_hat}.")
    if n < 1:
        raise FitError("Sample size must be positive.")
    levels = tuple(sorted(float(lev) for lev in levels))
    if any(not 0 < lev < 1 for lev in levels):
        raise FitError("Coverage levels must lie in (0, 1).")

    rng = np.random.default_rng(seed)
    sims = np.sort(rng.standard_t(nu_hat, size=(nsim, n)) * np.sqrt((nu_hat - 2.0) / nu_hat), axis=1)
    lower, upper = {}, {}
    for lev in levels:
        lower[lev] = np.quantile(sims, (1.0 - lev) / 2.0, axis=0)
        upper[lev] = np.quantile(sims, (1.0 + lev) / 2.0, axis=0)
    return QQEnvelope(nu_hat, n, nsim, levels, lower, upper, sims.min(axis=0), sims.max(axis=0), seed)

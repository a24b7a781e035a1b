"""
Margins objects module.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

PARAM_NAMES = ("mu", "phi", "theta", "alpha0", "alpha1", "beta", "nu")


class MarginalFit:
    """
    ARMA(1,1)-GARCH(1,1) fit with scaled t innovations.

    Attributes
    ----------
    mu, phi, theta : float
        Conditional mean level, AR and MA coefficients.
    alpha0, alpha1, beta : float
        Conditional variance constant, ARCH and GARCH coefficients.
    nu : float
        Innovation degrees of freedom, greater than 2.
    residuals : np.ndarray
        Standardized residuals of the fitted recursion.
    loglik : float
        Quasi-log-likelihood at the optimum.
    converged : bool
        Optimizer status.
    ticker : str
        Column the fit belongs to, if known.
    """

    def __init__(
        self,
        mu: float,
        phi: float,
        theta: float,
        alpha0: float,
        alpha1: float,
        beta: float,
        nu: float,
        residuals: np.ndarray,
        loglik: float,
        converged: bool,
        ticker: Optional[str] = None,
    ) -> None:
        """
        Constructor.
        """
        self.mu = float(mu)
        self.phi = float(phi)
        self.theta = float(theta)
        self.alpha0 = float(alpha0)
        self.alpha1 = float(alpha1)
        self.beta = float(beta)
        self.nu = float(nu)
        self.residuals = np.asarray(residuals, dtype=float)
        self.loglik = float(loglik)
        self.converged = bool(converged)
        self.ticker = ticker

    @property
    def params(self) -> tuple:
        """
        Parameters in the order mu, phi, theta, alpha0, alpha1, beta, nu.
        """
        return tuple(getattr(self, n) for n in PARAM_NAMES)

    def is_valid(self) -> bool:
        """
        Whether the parameters satisfy the model constraints.
        """
        return (
            abs(self.phi) < 1
            and abs(self.theta) < 1
            and self.alpha0 > 0
            and self.alpha1 >= 0
            and self.beta >= 0
            and self.alpha1 + self.beta < 1
            and self.nu > 2
        )

    def to_dict(self) -> dict:
        """
        Parameters and fit status, residuals excluded.
        """
        out = {"ticker": self.ticker}
        out.update({n: getattr(self, n) for n in PARAM_NAMES})
        out["loglik"] = self.loglik
        out["converged"] = self.converged
        return out

    def __repr__(self) -> str:
        return f"MarginalFit({self.to_dict()})"


class DiagnosticScore:
    """
    Test statistic attached to a series.

    Attributes
    ----------
    column : int | None
        Column index of the series.
    statistic : float
        Test statistic.
    p_value : float
        P-value in [0, 1], not corrected for multiple testing.
    lag : int | None
        Lag the statistic refers to, where applicable.
    ticker : str | None
        Column name, if known.
    """

    uncorrected = True

    def __init__(
        self,
        column: Optional[int],
        statistic: float,
        p_value: float,
        lag: Optional[int] = None,
        ticker: Optional[str] = None,
    ) -> None:
        self.column = column
        self.statistic = float(statistic)
        self.p_value = float(min(1.0, max(0.0, p_value)))
        self.lag = lag
        self.ticker = ticker

    def to_dict(self) -> dict:
        return {
            "column": self.column,
            "ticker": self.ticker,
            "statistic": self.statistic,
            "p_value": self.p_value,
            "lag": self.lag,
            "uncorrected": self.uncorrected,
        }

    def __repr__(self) -> str:
        return f"DiagnosticScore({self.to_dict()})"


class AcfResult:
    """
    Sample autocorrelations with the white-noise band.

    Attributes
    ----------
    values : np.ndarray
        Autocorrelations at lags 0..max_lag.
    band : float
        Half-width 1.96 / sqrt(n) of the white-noise band.
    n : int
        Series length.
    """

    def __init__(self, values: np.ndarray, band: float, n: int) -> None:
        self.values = np.asarray(values, dtype=float)
        self.band = float(band)
        self.n = int(n)

    @property
    def max_lag(self) -> int:
        return len(self.values) - 1


class QQEnvelope:
    """
    Pointwise simulated envelopes of scaled t order statistics.

    Attributes
    ----------
    nu_hat : float
        Degrees of freedom of the reference distribution.
    n : int
        Sample size.
    nsim : int
        Number of simulated samples.
    levels : tuple[float, ...]
        Central coverage fractions, ascending.
    lower, upper : dict[float, np.ndarray]
        Per order statistic band limits for each level.
    minimum, maximum : np.ndarray
        Per order statistic range over the simulations.
    seed : int
        Seed of the simulation.
    """

    def __init__(
        self,
        nu_hat: float,
        n: int,
        nsim: int,
        levels: tuple,
        lower: dict,
        upper: dict,
        minimum: np.ndarray,
        maximum: np.ndarray,
        seed: int,
    ) -> None:
        self.nu_hat = float(nu_hat)
        self.n = int(n)
        self.nsim = int(nsim)
        self.levels = tuple(levels)
        self.lower = lower
        self.upper = upper
        self.minimum = minimum
        self.maximum = maximum
        self.seed = seed

    def bands(self) -> list[tuple[str, np.ndarray, np.ndarray]]:
        """
        Bands from the widest (range) to the narrowest level.
        """
        out = [("range", self.minimum, self.maximum)]
        for lev in sorted(self.levels, reverse=True):
            out.append((f"{lev:g}", self.lower[lev], self.upper[lev]))
        return out

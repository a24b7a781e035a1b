"""
Rosenblatt transform of bivariate t copulas.
"""
from __future__ import annotations

import numpy as np
from scipy import special, stats

from zenscope.dependence.distributions import student_t_cdf, student_t_quantile
from zenscope.utils.commons import PROB_EPS
from zenscope.utils.exceptions import GofError


class RosenblattPair:
    """
    Rosenblatt transformed pair, jointly uniform under the hypothesized copula.

    Attributes
    ----------
    v1, v2 : np.ndarray
        Transformed series in (0, 1).
    """

    def __init__(self, v1: np.ndarray, v2: np.ndarray) -> None:
        self.v1 = np.asarray(v1, dtype=float)
        self.v2 = np.asarray(v2, dtype=float)
        if self.v1.shape != self.v2.shape:
            raise GofError("Rosenblatt series lengths differ.")

    def as_array(self) -> np.ndarray:
        return np.column_stack([self.v1, self.v2])


def rosenblatt_biv_t(u: np.ndarray, rho: float, nu: float, reverse: bool = False) -> RosenblattPair:
    """
    Rosenblatt transform of a pair under a bivariate t copula.

    v1 = u1 and v2 = C(u2 | u1), the conditional distribution function of the
    second variate given the first. With ``reverse`` the roles are swapped.

    Parameters
    ----------
    u : np.ndarray
        Pseudo-observations, shape (T, 2).
    rho : float
        Correlation in (-1, 1).
    nu : float
        Degrees of freedom, positive.
    reverse : bool
        Condition the first variate on the second.

    Returns
    -------
    RosenblattPair
        Transformed pair.

    Raises
    ------
    GofError
        On entries outside (0, 1) or invalid parameters.
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 2 or u.shape[1] != 2:
        raise GofError("Expected a (T, 2) array of pseudo-observations.")
    if np.any(~((u > 0) & (u < 1))):
        raise GofError("Pseudo-observations must lie in (0, 1).")
    if not -1.0 < rho < 1.0:
        raise GofError(f"Correlation must lie in (-1, 1), got {rho}.")
    if not nu > 0:
        raise GofError(f"Degrees of freedom must be positive, got {nu}.")
    first, second = (u[:, 1], u[:, 0]) if reverse else (u[:, 0], u[:, 1])
    x1 = student_t_quantile(first, nu)
    x2 = student_t_quantile(second, nu)
    arg = (x2 - rho * x1) * np.sqrt((nu + 1.0) / ((nu + x1 * x1) * (1.0 - rho * rho)))
    return RosenblattPair(first.copy(), student_t_cdf(arg, nu + 1.0))


def chisq_map(v: RosenblattPair) -> np.ndarray:
    """
    Map Rosenblatt output to w = Phi^{-1}(v1)^2 + Phi^{-1}(v2)^2.

    Under the hypothesized copula w is chi-square with 2 degrees of freedom.
    Probabilities are clamped to [1e-16, 1 - 1e-16] so w is always finite.
    """
    z1 = special.ndtri(np.clip(v.v1, PROB_EPS, 1.0 - PROB_EPS))
    z2 = special.ndtri(np.clip(v.v2, PROB_EPS, 1.0 - PROB_EPS))
    return z1 * z1 + z2 * z2


def uniformity_chisq(v: RosenblattPair, bins: int = 4) -> tuple[float, float]:
    """
    Pearson chi-square test of uniformity on a bins x bins grid of the square.

    Returns
    -------
    tuple[float, float]
        Statistic and p-value with bins^2 - 1 degrees of freedom.
    """
    if bins < 2:
        raise GofError("At least two bins per axis are needed.")
    edges = np.linspace(0.0, 1.0, bins + 1)
    counts, _, _ = np.histogram2d(v.v1, v.v2, bins=[edges, edges])
    res = stats.chisquare(counts.ravel())
    return float(res.statistic), float(res.pvalue)

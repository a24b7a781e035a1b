"""
Upper tail-dependence coefficients.
"""
from __future__ import annotations

import numpy as np

from zenscope.dependence.distributions import student_t_cdf
from zenscope.utils.exceptions import DependenceError

MIN_CORNER_POINTS = 10


def lambda_from_rho_nu(rho: float, nu: float) -> float:
    """
    Tail-dependence coefficient of a bivariate t copula,
    2 t_{nu+1}(-sqrt((nu + 1)(1 - rho) / (1 + rho))).

    Parameters
    ----------
    rho : float
        Correlation in [-1, 1].
    nu : float
        Degrees of freedom, positive.

    Returns
    -------
    float
        Coefficient in [0, 1]. rho = 1 gives 1 and rho = -1 gives the limit 0.

    Raises
    ------
    DependenceError
        If rho is outside [-1, 1] or nu is not positive.
    """
    rho = float(rho)
    if not nu > 0:
        raise DependenceError(f"Degrees of freedom must be positive, got {nu}.")
    if not -1.0 <= rho <= 1.0 + 1e-12:
        raise DependenceError(f"Correlation must lie in [-1, 1], got {rho}.")
    if rho >= 1.0:
        return 1.0
    if rho == -1.0:
        return 0.0
    arg = -np.sqrt((nu + 1.0) * (1.0 - rho) / (1.0 + rho))
    return float(min(1.0, max(0.0, 2.0 * student_t_cdf(arg, nu + 1.0))))


def lambda_nonparam(u: np.ndarray, p: float = 0.1) -> float:
    """
    Nonparametric upper tail-dependence estimate.

    On the survival scale the corner [0, p]^2 is scored by the conditional
    Spearman's rho, normalized so that independence gives 0 and comonotonicity
    gives 1.

    Parameters
    ----------
    u : np.ndarray
        Pseudo-observations of a pair, shape (T, 2).
    p : float
        Corner size in (0, 0.5].

    Returns
    -------
    float
        Estimate clamped to [0, 1].

    Raises
    ------
    DependenceError
        If p is out of range or fewer than 10 observations fall in the corner.
    """
    if not 0.0 < p <= 0.5:
        raise DependenceError(f"Corner size must lie in (0, 0.5], got {p}.")
    u = np.asarray(u, dtype=float)
    if u.ndim != 2 or u.shape[1] != 2:
        raise DependenceError("Expected a (T, 2) array of pseudo-observations.")
    surv = 1.0 - u
    gap = np.clip(p - surv, 0.0, None)
    if np.count_nonzero(np.all(surv <= p, axis=1)) < MIN_CORNER_POINTS:
        raise DependenceError("Insufficient corner mass.")
    a = float(np.mean(gap[:, 0] * gap[:, 1]))
    indep = p**4 / 4.0
    como = p**3 / 3.0
    return float(np.clip((a - indep) / (como - indep), 0.0, 1.0))

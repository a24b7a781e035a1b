"""
Student t copula fitting and simulation.

Correlations come from the inversion of Kendall's tau, rho = sin(pi tau / 2),
and the degrees of freedom maximize the log-pseudo-likelihood with the
correlation held fixed, by a bounded search over log nu in [log 1, log 300].
"""
from __future__ import annotations

import math
import typing
from typing import Sequence

import numpy as np
from scipy import linalg, optimize, special

from zenscope.dependence.concordance import PseudoObsMatrix, kendall_tau
from zenscope.dependence.distributions import student_t_cdf, student_t_quantile
from zenscope.dependence.tail import lambda_from_rho_nu
from zenscope.utils.commons import EIGEN_FLOOR, NU_LOWER, NU_UPPER, PROB_EPS
from zenscope.utils.exceptions import DependenceError
from zenscope.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from zenscope.run.config import ExecConfig

MIN_PAIR_ROWS = 30
NU_XATOL = 1e-4
# Distance on the log scale below which nu is reported at a bound
BOUND_TOL = 1e-3


class BivTCopulaFit:
    """
    Bivariate t copula fit.

    Attributes
    ----------
    rho : float
        Correlation parameter.
    nu : float
        Degrees of freedom.
    tau_hat : float
        Sample Kendall's tau the correlation was inverted from.
    loglik : float
        Log-pseudo-likelihood at (rho, nu).
    lam : float
        Implied upper tail-dependence coefficient.
    nu_at_bound : bool
        Whether the search stopped at a bound of the nu interval.
    """

    def __init__(
        self,
        rho: float,
        nu: float,
        tau_hat: float,
        loglik: float,
        lam: float | None = None,
        nu_at_bound: bool = False,
    ) -> None:
        self.rho = float(rho)
        self.nu = float(nu)
        self.tau_hat = float(tau_hat)
        self.loglik = float(loglik)
        self.lam = lambda_from_rho_nu(self.rho, self.nu) if lam is None else float(lam)
        self.nu_at_bound = bool(nu_at_bound)

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "nu": self.nu,
            "tau_hat": self.tau_hat,
            "loglik": self.loglik,
            "lambda": self.lam,
            "nu_at_bound": self.nu_at_bound,
        }

    def __repr__(self) -> str:
        return f"BivTCopulaFit({self.to_dict()})"


class JointTCopulaFit:
    """
    Joint t copula fit with a single degrees of freedom parameter.

    Attributes
    ----------
    P : np.ndarray
        Correlation matrix, symmetric with unit diagonal.
    nu : float
        Degrees of freedom.
    loglik : float
        Log-pseudo-likelihood.
    tickers : list[str]
        Column identifiers.
    projected : bool
        Whether the tau-inverted matrix needed the positive definite projection.
    nu_at_bound : bool
        Whether the search stopped at a bound of the nu interval.
    """

    def __init__(
        self,
        P: np.ndarray,
        nu: float,
        loglik: float,
        tickers: Sequence[str],
        projected: bool = False,
        nu_at_bound: bool = False,
    ) -> None:
        self.P = np.asarray(P, dtype=float)
        self.nu = float(nu)
        self.loglik = float(loglik)
        self.tickers = [str(t) for t in tickers]
        self.projected = bool(projected)
        self.nu_at_bound = bool(nu_at_bound)

    @property
    def d(self) -> int:
        return self.P.shape[0]

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.P)[0])

    def to_dict(self) -> dict:
        return {
            "tickers": self.tickers,
            "nu": self.nu,
            "loglik": self.loglik,
            "projected": self.projected,
            "nu_at_bound": self.nu_at_bound,
            "min_eigenvalue": self.min_eigenvalue(),
            "P": self.P.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> JointTCopulaFit:
        return cls(
            np.array(data["P"], dtype=float),
            data["nu"],
            data["loglik"],
            data["tickers"],
            projected=data.get("projected", False),
            nu_at_bound=data.get("nu_at_bound", False),
        )

    def __repr__(self) -> str:
        return f"JointTCopulaFit(d={self.d}, nu={self.nu:.4g}, loglik={self.loglik:.6g})"


#############################
# Densities
#############################


def itau_rho(tau: float) -> float:
    """
    Correlation matching a Kendall's tau for elliptical copulas.
    """
    return math.sin(math.pi * float(tau) / 2.0)


def t_copula_logpdf(x: np.ndarray, P: np.ndarray, nu: float) -> np.ndarray:
    """
    Log-density of the t copula at t quantiles.

    Parameters
    ----------
    x : np.ndarray
        Quantiles t_nu^{-1}(u), shape (n, d).
    P : np.ndarray
        Positive definite correlation matrix.
    nu : float
        Degrees of freedom.

    Returns
    -------
    np.ndarray
        Log-density per row.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    d = x.shape[1]
    try:
        chol = linalg.cholesky(P, lower=True)
    except linalg.LinAlgError as exc:
        raise DependenceError("Correlation matrix is not positive definite.") from exc
    w = linalg.solve_triangular(chol, x.T, lower=True)
    quad = np.sum(w * w, axis=0)
    logdet = 2.0 * np.sum(np.log(np.diag(chol)))
    const = (
        special.gammaln(0.5 * (nu + d))
        + (d - 1) * special.gammaln(0.5 * nu)
        - d * special.gammaln(0.5 * (nu + 1.0))
        - 0.5 * logdet
    )
    return const - 0.5 * (nu + d) * np.log1p(quad / nu) + 0.5 * (nu + 1.0) * np.sum(np.log1p(x * x / nu), axis=1)


def _biv_loglik(u: np.ndarray, rho: float, nu: float) -> float:
    x = student_t_quantile(u, nu)
    x1, x2 = x[:, 0], x[:, 1]
    one_m = 1.0 - rho * rho
    quad = (x1 * x1 - 2.0 * rho * x1 * x2 + x2 * x2) / one_m
    const = special.gammaln(0.5 * (nu + 2.0)) + special.gammaln(0.5 * nu) - 2.0 * special.gammaln(0.5 * (nu + 1.0))
    dens = (
        const
        - 0.5 * np.log(one_m)
        - 0.5 * (nu + 2.0) * np.log1p(quad / nu)
        + 0.5 * (nu + 1.0) * (np.log1p(x1 * x1 / nu) + np.log1p(x2 * x2 / nu))
    )
    return float(np.sum(dens))


def _search_nu(objective: typing.Callable[[float], float]) -> tuple[float, float, bool]:
    """
    Minimize an objective of log nu over the nu interval.
    """
    lo, hi = np.log(NU_LOWER), np.log(NU_UPPER)
    res = optimize.minimize_scalar(objective, bounds=(lo, hi), method="bounded", options={"xatol": NU_XATOL})
    at_bound = bool(res.x - lo < BOUND_TOL or hi - res.x < BOUND_TOL)
    return float(np.exp(res.x)), float(-res.fun), at_bound


#############################
# Fits
#############################


def fit_biv_t(u: np.ndarray) -> BivTCopulaFit:
    """
    Fit a bivariate t copula to a pair of pseudo-observations.

    Parameters
    ----------
    u : np.ndarray
        Pseudo-observations, shape (n, 2), n at least 30.

    Returns
    -------
    BivTCopulaFit
        The fit, nu_at_bound flags a search ending on a bound.

    Raises
    ------
    DependenceError
        On too few rows or a degenerate pair with |tau| = 1.
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 2 or u.shape[1] != 2:
        raise DependenceError("Expected a (n, 2) array of pseudo-observations.")
    if u.shape[0] < MIN_PAIR_ROWS:
        raise DependenceError(f"At least {MIN_PAIR_ROWS} rows are needed, got {u.shape[0]}.")
    tau = kendall_tau(u[:, 0], u[:, 1])
    if abs(tau) >= 1.0:
        raise DependenceError("Degenerate pair, |tau| = 1.")
    rho = itau_rho(tau)

    def objective(log_nu: float) -> float:
        value = -_biv_loglik(u, rho, np.exp(log_nu))
        return value if np.isfinite(value) else np.inf

    nu, loglik, at_bound = _search_nu(objective)
    return BivTCopulaFit(rho, nu, tau, loglik, nu_at_bound=at_bound)


def nearest_correlation(P: np.ndarray, floor: float = EIGEN_FLOOR) -> tuple[np.ndarray, bool]:
    """
    Project a symmetric matrix onto positive definite correlation matrices.

    Matrices whose smallest eigenvalue is at least ``floor`` are returned
    symmetrized but otherwise untouched. Others have their eigenvalues clipped
    at ``floor`` and are rescaled to unit diagonal.

    Returns
    -------
    tuple[np.ndarray, bool]
        The matrix and whether it was projected.

    Raises
    ------
    DependenceError
        If the matrix holds non finite entries.
    """
    P = np.asarray(P, dtype=float)
    if not np.all(np.isfinite(P)):
        raise DependenceError("Correlation matrix has non finite entries.")
    P = 0.5 * (P + P.T)
    eigval, eigvec = np.linalg.eigh(P)
    if eigval[0] >= floor:
        return P, False
    LOGGER.info(f"Projecting correlation matrix, smallest eigenvalue {eigval[0]:.3g}.")
    Q = (eigvec * np.clip(eigval, floor, None)) @ eigvec.T
    scale = 1.0 / np.sqrt(np.diag(Q))
    Q = Q * np.outer(scale, scale)
    Q = 0.5 * (Q + Q.T)
    np.fill_diagonal(Q, 1.0)
    if not np.all(np.isfinite(Q)):
        raise DependenceError("Projection of the correlation matrix failed.")
    return Q, True


def fit_joint_t(U: PseudoObsMatrix, exec_config: ExecConfig | None = None) -> JointTCopulaFit:
    """
    Fit a t copula to all columns at once.

    Parameters
    ----------
    U : PseudoObsMatrix
        Pseudo-observations, at least two columns.
    exec_config : ExecConfig
        Parallel settings of the pairwise Kendall's tau computation.

    Returns
    -------
    JointTCopulaFit
        The fit.

    Raises
    ------
    DependenceError
        If fewer than two columns are given or a pairwise tau is undefined.
    """
    from zenscope.dependence.matrix import dependence_matrix
    from zenscope.utils.commons import MEASURE_TAU

    if U.d < 2:
        raise DependenceError("At least two columns are needed.")
    taus = dependence_matrix(U, MEASURE_TAU, exec_config)
    if taus.failures:
        raise DependenceError(f"Kendall's tau undefined for {len(taus.failures)} pairs.")
    rho = np.eye(U.d)
    for i, j in zip(*np.triu_indices(U.d, k=1)):
        rho[i, j] = rho[j, i] = itau_rho(taus.values[i, j])
    P, projected = nearest_correlation(rho)

    def objective(log_nu: float) -> float:
        nu = np.exp(log_nu)
        value = -float(np.sum(t_copula_logpdf(student_t_quantile(U.values, nu), P, nu)))
        return value if np.isfinite(value) else np.inf

    nu, loglik, at_bound = _search_nu(objective)
    LOGGER.info(f"Joint t copula: d={U.d}, nu={nu:.4g}.")
    return JointTCopulaFit(P, nu, loglik, U.tickers, projected=projected, nu_at_bound=at_bound)


def simulate_t_copula(P: np.ndarray, nu: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw from a t copula.

    Parameters
    ----------
    P : np.ndarray
        Positive definite correlation matrix, shape (d, d).
    nu : float
        Degrees of freedom.
    n : int
        Number of draws.
    rng : np.random.Generator
        Random generator.

    Returns
    -------
    np.ndarray
        Uniforms, shape (n, d), inside [1e-16, 1 - 1e-16].
    """
    P = np.asarray(P, dtype=float)
    try:
        chol = linalg.cholesky(P, lower=True)
    except linalg.LinAlgError as exc:
        raise DependenceError("Correlation matrix is not positive definite.") from exc
    z = rng.standard_normal((n, P.shape[0])) @ chol.T
    w = rng.chisquare(nu, size=n)
    x = z / np.sqrt(w / nu)[:, None]
    return np.clip(student_t_cdf(x, nu), PROB_EPS, 1.0 - PROB_EPS)

"""
ARMA(1,1)-GARCH(1,1) module.

Model:

    X_t       = mu_t + sigma_t Z_t
    mu_t      = mu + phi (X_{t-1} - mu) + theta (X_{t-1} - mu_{t-1})
    sigma_t^2 = alpha0 + alpha1 (X_{t-1} - mu_{t-1})^2 + beta sigma_{t-1}^2

with Z_t unit variance t innovations. The pre-sample X_0 and mu_0 equal the
sample mean and sigma_1^2 is the sample variance. Both recursions are linear
filters and are evaluated with ``scipy.signal.lfilter``.
"""
from __future__ import annotations

import typing

import numpy as np
import pandas as pd
from scipy import optimize, signal, special

from zenscope.margins.objects import PARAM_NAMES, MarginalFit
from zenscope.run.handler import TaskHandler
from zenscope.run.utils import exec_decorator
from zenscope.utils.exceptions import FitError
from zenscope.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from zenscope.dataset.objects import ReturnMatrix
    from zenscope.run.config import ExecConfig
    from zenscope.run.utils import Result

MIN_LENGTH = 100
PENALTY = 1e10
# Standardized-scale starting point: mu, phi, theta, alpha0, alpha1, beta, nu
START = (0.0, 0.0, 0.0, 0.05, 0.10, 0.85, 8.0)
RESTART_SCALE = 0.5
NM_OPTIONS = {"maxiter": 6000, "maxfev": 6000, "xatol": 1e-8, "fatol": 1e-10, "adaptive": True}


#############################
# Parameter transforms
#############################


def _unpack(raw: np.ndarray) -> tuple:
    """
    Map an unbounded vector onto the constrained parameters.
    """
    m, a, b, c, d, e, f = raw
    phi = 2.0 * special.expit(a) - 1.0
    theta = 2.0 * special.expit(b) - 1.0
    alpha0 = np.exp(c)
    # Simplex over (alpha1, beta, 1 - alpha1 - beta)
    denom = 1.0 + np.exp(d) + np.exp(e)
    alpha1 = np.exp(d) / denom
    beta = np.exp(e) / denom
    nu = 2.0 + np.exp(f)
    return (m, phi, theta, alpha0, alpha1, beta, nu)


def _pack(params: tuple) -> np.ndarray:
    """
    Inverse of ``_unpack``. Parameters on the boundary are nudged inside.
    """
    mu, phi, theta, alpha0, alpha1, beta, nu = (float(p) for p in params)
    tiny = 1e-8
    phi = np.clip(phi, -1 + tiny, 1 - tiny)
    theta = np.clip(theta, -1 + tiny, 1 - tiny)
    alpha1 = max(alpha1, tiny)
    beta = max(beta, tiny)
    rest = 1.0 - alpha1 - beta
    if rest <= tiny:
        scale = (1.0 - 2 * tiny) / (alpha1 + beta)
        alpha1, beta, rest = alpha1 * scale, beta * scale, 2 * tiny
    return np.array(
        [
            mu,
            special.logit((phi + 1.0) / 2.0),
            special.logit((theta + 1.0) / 2.0),
            np.log(max(alpha0, tiny * tiny)),
            np.log(alpha1 / rest),
            np.log(beta / rest),
            np.log(max(nu - 2.0, tiny)),
        ]
    )


def _to_standard(params: tuple, center: float, scale: float) -> tuple:
    mu, phi, theta, alpha0, alpha1, beta, nu = params
    return ((mu - center) / scale, phi, theta, alpha0 / scale**2, alpha1, beta, nu)


def _from_standard(params: tuple, center: float, scale: float) -> tuple:
    mu, phi, theta, alpha0, alpha1, beta, nu = params
    return (center + scale * mu, phi, theta, alpha0 * scale**2, alpha1, beta, nu)


#############################
# Likelihood
#############################


def _filter(x: np.ndarray, params: tuple, center: float, var: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Innovations eps_t = X_t - mu_t and conditional variances sigma_t^2.
    """
    mu, phi, theta, alpha0, alpha1, beta, _ = params
    y = x - mu
    b, a = [1.0, -phi], [1.0, theta]
    zi = signal.lfiltic(b, a, y=[0.0], x=[center - mu])
    eps, _ = signal.lfilter(b, a, y, zi=zi)
    sig2 = np.empty_like(x)
    sig2[0] = var
    if x.size > 1:
        drive = alpha0 + alpha1 * eps[:-1] ** 2
        sig2[1:], _ = signal.lfilter([1.0], [1.0, -beta], drive, zi=[beta * var])
    return eps, sig2


def _loglik(x: np.ndarray, params: tuple, center: float, var: float) -> float:
    nu = params[-1]
    eps, sig2 = _filter(x, params, center, var)
    if np.any(~(sig2 > 0)):
        return -np.inf
    z2 = eps * eps / sig2
    const = special.gammaln(0.5 * (nu + 1.0)) - special.gammaln(0.5 * nu) - 0.5 * np.log(np.pi * (nu - 2.0))
    return float(x.size * const - 0.5 * np.sum(np.log(sig2)) - 0.5 * (nu + 1.0) * np.sum(np.log1p(z2 / (nu - 2.0))))


def arma_garch_loglik(x: np.ndarray, params: tuple) -> float:
    """
    Quasi-log-likelihood of a series under given parameters.

    Parameters
    ----------
    x : np.ndarray
        Return series.
    params : tuple
        mu, phi, theta, alpha0, alpha1, beta, nu.

    Returns
    -------
    float
        Log-likelihood, -inf where the variance recursion breaks down.
    """
    x = np.asarray(x, dtype=float)
    return _loglik(x, tuple(params), float(np.mean(x)), float(np.var(x)))


def arma_garch_residuals(x: np.ndarray, params: tuple) -> np.ndarray:
    """
    Standardized residuals (X_t - mu_t) / sigma_t under given parameters.
    """
    x = np.asarray(x, dtype=float)
    eps, sig2 = _filter(x, tuple(params), float(np.mean(x)), float(np.var(x)))
    return eps / np.sqrt(sig2)


def _objective(raw: np.ndarray, y: np.ndarray) -> float:
    with np.errstate(all="ignore"):
        value = -_loglik(y, _unpack(raw), 0.0, 1.0)
    return value if np.isfinite(value) else PENALTY


#############################
# Fit
#############################


def fit_arma_garch(
    x: np.ndarray,
    init: MarginalFit | tuple | None = None,
    restarts: int = 3,
    seed: int = 0,
    ticker: str | None = None,
) -> MarginalFit:
    """
    Fit the model by quasi maximum likelihood.

    The series is standardized, parameters are mapped to an unbounded space and
    Nelder-Mead runs from a fixed start plus ``restarts`` random perturbations.
    The best run is polished by a final Nelder-Mead pass. With ``init`` the
    search is a single warm start from the given parameters.

    Parameters
    ----------
    x : np.ndarray
        Return series, at least 100 observations.
    init : MarginalFit | tuple
        Optional starting parameters.
    restarts : int
        Number of random restarts.
    seed : int
        Seed of the restart perturbations.
    ticker : str
        Column name stored in the fit.

    Returns
    -------
    MarginalFit
        Fitted parameters and residuals.

    Raises
    ------
    FitError
        On short or constant series, or if no restart reaches a finite likelihood.
    """
    x = np.asarray(x, dtype=float)
    label = ticker or "series"
    if x.ndim != 1 or x.size < MIN_LENGTH:
        raise FitError(f"{label}: at least {MIN_LENGTH} observations are needed.")
    if not np.all(np.isfinite(x)):
        raise FitError(f"{label}: series contains non finite values.")
    center, scale = float(np.mean(x)), float(np.std(x))
    if scale == 0.0 or np.ptp(x) == 0.0:
        raise FitError(f"{label}: series is constant.")
    y = (x - center) / scale

    if init is not None:
        start = init.params if isinstance(init, MarginalFit) else tuple(init)
        starts = [_pack(_to_standard(start, center, scale))]
    else:
        base = _pack(START)
        rng = np.random.default_rng(seed)
        starts = [base] + [base + rng.normal(0.0, RESTART_SCALE, size=base.size) for _ in range(restarts)]

    best = None
    for raw0 in starts:
        res = optimize.minimize(_objective, raw0, args=(y,), method="Nelder-Mead", options=NM_OPTIONS)
        if best is None or res.fun < best.fun:
            best = res
    polish = optimize.minimize(_objective, best.x, args=(y,), method="Nelder-Mead", options=NM_OPTIONS)
    if polish.fun <= best.fun:
        best = polish

    params = _from_standard(_unpack(best.x), center, scale)
    if not best.fun < PENALTY:
        raise FitError(f"{label}: optimizer failed after all restarts.", best=dict(zip(PARAM_NAMES, params)))
    if not polish.success:
        LOGGER.warning(f"{label}: optimizer did not converge ({polish.message}).")

    return MarginalFit(
        *params,
        residuals=arma_garch_residuals(x, params),
        loglik=arma_garch_loglik(x, params),
        converged=bool(polish.success),
        ticker=ticker,
    )


def arma_garch_std_errors(x: np.ndarray, fit: MarginalFit) -> dict[str, float]:
    """
    Asymptotic standard errors from a central-difference Hessian of the
    negative log-likelihood.

    Parameters
    ----------
    x : np.ndarray
        Series the model was fitted to.
    fit : MarginalFit
        Fitted model.

    Returns
    -------
    dict[str, float]
        Standard error per parameter, NaN where the Hessian is not positive.
    """
    x = np.asarray(x, dtype=float)
    theta0 = np.array(fit.params)
    sd = float(np.std(x))
    typical = np.array([0.1 * sd, 0.1, 0.1, abs(fit.alpha0), 0.01, 0.1, 1.0])
    h = 1e-4 * np.maximum(np.abs(theta0), typical)

    def nll(theta: np.ndarray) -> float:
        return -arma_garch_loglik(x, tuple(theta))

    k = theta0.size
    hess = np.empty((k, k))
    f0 = nll(theta0)
    for i in range(k):
        ei = np.zeros(k)
        ei[i] = h[i]
        hess[i, i] = (nll(theta0 + ei) - 2.0 * f0 + nll(theta0 - ei)) / h[i] ** 2
        for j in range(i):
            ej = np.zeros(k)
            ej[j] = h[j]
            val = (
                nll(theta0 + ei + ej) - nll(theta0 + ei - ej) - nll(theta0 - ei + ej) + nll(theta0 - ei - ej)
            ) / (4.0 * h[i] * h[j])
            hess[i, j] = hess[j, i] = val
    try:
        cov = np.linalg.inv(hess)
        var = np.diag(cov)
    except np.linalg.LinAlgError:
        var = np.full(k, np.nan)
    se = np.where(var > 0, np.sqrt(np.abs(var)), np.nan)
    return dict(zip(PARAM_NAMES, se.tolist()))


def simulate_arma_garch(
    params: tuple,
    n: int,
    rng: np.random.Generator,
    burn: int = 500,
    innovations: np.ndarray | None = None,
) -> np.ndarray:
    """
    Simulate the model.

    Parameters
    ----------
    params : tuple
        mu, phi, theta, alpha0, alpha1, beta, nu. Each entry may be an array of
        length d to simulate d independent-parameter columns at once.
    n : int
        Number of returned observations.
    rng : np.random.Generator
        Random generator, used when no innovations are given.
    burn : int
        Discarded warm-up observations.
    innovations : np.ndarray
        Optional unit variance innovations of shape (burn + n,) or (burn + n, d).

    Returns
    -------
    np.ndarray
        Simulated series, shape (n,) or (n, d).
    """
    mu, phi, theta, alpha0, alpha1, beta, nu = (np.asarray(p, dtype=float) for p in params)
    shape = np.broadcast(mu, phi, theta, alpha0, alpha1, beta, nu).shape
    total = burn + n
    if innovations is None:
        z = rng.standard_t(np.broadcast_to(nu, (total,) + shape)) * np.sqrt((nu - 2.0) / nu)
    else:
        z = np.asarray(innovations, dtype=float).reshape((total,) + shape)
    out = np.empty((total,) + shape)
    x_prev = np.broadcast_to(mu, shape).astype(float)
    eps_prev = np.zeros(shape)
    sig2_prev = np.broadcast_to(alpha0 / (1.0 - alpha1 - beta), shape).astype(float)
    for t in range(total):
        mean = mu + phi * (x_prev - mu) + theta * eps_prev
        sig2 = alpha0 + alpha1 * eps_prev**2 + beta * sig2_prev
        eps = np.sqrt(sig2) * z[t]
        out[t] = mean + eps
        x_prev, eps_prev, sig2_prev = out[t], eps, sig2
    return out[burn:]


#############################
# Column batch
#############################


@exec_decorator
def _fit_column(values: np.ndarray, column: int, ticker: str, restarts: int, seed: int) -> MarginalFit:
    return fit_arma_garch(values[:, column], restarts=restarts, seed=seed, ticker=ticker)


def _fit_chunk(payload: tuple, chunk: list) -> list[Result]:
    values, tickers, restarts, seed = payload
    return [_fit_column(values, j, tickers[j], restarts, seed + j) for j in chunk]


def fit_margins(returns: ReturnMatrix, exec_config: ExecConfig, seed: int, restarts: int = 3) -> list[MarginalFit]:
    """
    Fit every column of a return matrix, in column order.

    Parameters
    ----------
    returns : ReturnMatrix
        Return matrix.
    exec_config : ExecConfig
        Parallel execution settings.
    seed : int
        Base seed, column j uses ``seed + j``.
    restarts : int
        Random restarts per column.

    Returns
    -------
    list[MarginalFit]
        One fit per column.

    Raises
    ------
    FitError
        If any column cannot be fitted.
    """
    LOGGER.info(f"Fitting {len(returns.tickers)} marginal models.")
    handler = TaskHandler(exec_config)
    results = handler.run(_fit_chunk, (returns.values, returns.tickers, restarts, seed), range(len(returns.tickers)))
    failed = handler.failures()
    if failed:
        raise FitError("; ".join(r.reason for r in failed))
    return [r.artifact for r in results]


def residual_matrix(fits: list[MarginalFit], returns: ReturnMatrix) -> pd.DataFrame:
    """
    Standardized residuals of every column as a frame with the return header.
    """
    if len(fits) != len(returns.tickers):
        raise FitError(f"Expected {len(returns.tickers)} fits, got {len(fits)}.")
    values = np.column_stack([f.residuals for f in fits])
    return pd.DataFrame(values, index=pd.Index(returns.dates, name="date"), columns=returns.tickers)


def standardized_residual_moments(fit: MarginalFit) -> tuple[float, float]:
    """
    Sample mean and population variance of the residuals of a fit.
    """
    res = fit.residuals
    if res.size == 0:
        return (0.0, 0.0)
    return (float(np.mean(res)), float(np.var(res)))

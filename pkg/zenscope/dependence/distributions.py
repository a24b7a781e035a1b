"""
Student t distribution functions.

The CDF is evaluated through the regularized incomplete beta function and the
quantile is polished by Newton steps on that CDF so that
``|cdf(quantile(p)) - p| < 1e-12``. The scaled t used for innovations has
unit variance: F(z) = t_nu(z * sqrt(nu / (nu - 2))).
"""
from __future__ import annotations

import numpy as np
from scipy import optimize, special

from zenscope.utils.exceptions import DependenceError

QUANTILE_TOL = 1e-12


def _as_float(arr: np.ndarray, scalar: bool) -> np.ndarray | float:
    return float(arr) if scalar else arr


def _check_nu(nu: np.ndarray) -> None:
    if np.any(~(nu > 0)):
        raise DependenceError("Degrees of freedom must be positive.")


def student_t_cdf(x: np.ndarray | float, nu: np.ndarray | float) -> np.ndarray | float:
    """
    Distribution function of the Student t distribution.

    Parameters
    ----------
    x : np.ndarray | float
        Evaluation points.
    nu : np.ndarray | float
        Degrees of freedom, positive. Broadcast against x.

    Returns
    -------
    np.ndarray | float
        Probabilities.

    Raises
    ------
    DependenceError
        If nu is not positive.
    """
    scalar = np.ndim(x) == 0 and np.ndim(nu) == 0
    x = np.asarray(x, dtype=float)
    nu = np.asarray(nu, dtype=float)
    _check_nu(nu)
    with np.errstate(invalid="ignore"):
        tail = 0.5 * special.betainc(0.5 * nu, 0.5, nu / (nu + x * x))
    out = np.where(x < 0, tail, 1.0 - tail)
    return _as_float(out, scalar)


def student_t_logpdf(x: np.ndarray | float, nu: np.ndarray | float) -> np.ndarray | float:
    """
    Log-density of the Student t distribution.
    """
    scalar = np.ndim(x) == 0 and np.ndim(nu) == 0
    x = np.asarray(x, dtype=float)
    nu = np.asarray(nu, dtype=float)
    _check_nu(nu)
    out = (
        special.gammaln(0.5 * (nu + 1.0))
        - special.gammaln(0.5 * nu)
        - 0.5 * np.log(nu * np.pi)
        - 0.5 * (nu + 1.0) * np.log1p(x * x / nu)
    )
    return _as_float(out, scalar)


def student_t_pdf(x: np.ndarray | float, nu: np.ndarray | float) -> np.ndarray | float:
    """
    Density of the Student t distribution.
    """
    return np.exp(student_t_logpdf(x, nu))


def _bracket_root(p: float, nu: float, guess: float) -> float:
    """
    Monotone root-find of cdf(q) = p around a first guess.
    """
    width = max(1.0, abs(guess))
    lo, hi = guess - width, guess + width
    while student_t_cdf(lo, nu) > p:
        lo -= 2.0 * (hi - lo)
    while student_t_cdf(hi, nu) < p:
        hi += 2.0 * (hi - lo)
    return optimize.brentq(lambda q: student_t_cdf(q, nu) - p, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps)


def student_t_quantile(p: np.ndarray | float, nu: np.ndarray | float) -> np.ndarray | float:
    """
    Quantile function of the Student t distribution.

    Parameters
    ----------
    p : np.ndarray | float
        Probabilities in (0, 1).
    nu : np.ndarray | float
        Degrees of freedom, positive. Broadcast against p.

    Returns
    -------
    np.ndarray | float
        Quantiles.

    Raises
    ------
    DependenceError
        If a probability is outside (0, 1) or nu is not positive.
    """
    scalar = np.ndim(p) == 0 and np.ndim(nu) == 0
    p = np.asarray(p, dtype=float)
    nu = np.asarray(nu, dtype=float)
    _check_nu(nu)
    if np.any(~((p > 0) & (p < 1))):
        raise DependenceError("Probabilities must lie in the open interval (0, 1).")
    p, nu = np.broadcast_arrays(p, nu)
    q = special.stdtrit(nu, p)
    for _ in range(2):
        err = student_t_cdf(q, nu) - p
        dens = student_t_pdf(q, nu)
        step = np.divide(err, dens, out=np.zeros_like(err), where=dens > 0)
        q = q - step
    err = np.abs(student_t_cdf(q, nu) - p)
    bad = np.flatnonzero((err >= QUANTILE_TOL) | ~np.isfinite(q))
    if bad.size:
        q = np.array(q, copy=True)
        flat_q, flat_p, flat_nu = q.reshape(-1), p.reshape(-1), nu.reshape(-1)
        guess = special.stdtrit(flat_nu[bad], flat_p[bad])
        for k, g in zip(bad, guess):
            flat_q[k] = _bracket_root(flat_p[k], flat_nu[k], g if np.isfinite(g) else 0.0)
    return _as_float(q, scalar)


def scaled_t_cdf(z: np.ndarray | float, nu: float) -> np.ndarray | float:
    """
    Distribution function of the unit variance t distribution (nu > 2).
    """
    if not nu > 2:
        raise DependenceError("The scaled t distribution needs nu > 2.")
    return student_t_cdf(np.asarray(z, dtype=float) * np.sqrt(nu / (nu - 2.0)), nu)


def scaled_t_quantile(p: np.ndarray | float, nu: float) -> np.ndarray | float:
    """
    Quantile function of the unit variance t distribution (nu > 2).
    """
    if not nu > 2:
        raise DependenceError("The scaled t distribution needs nu > 2.")
    return student_t_quantile(p, nu) * np.sqrt((nu - 2.0) / nu)

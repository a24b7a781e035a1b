"""
Pairwise dependence matrices.
"""
from __future__ import annotations

import typing
from typing import Sequence

import numpy as np
import pandas as pd

from zenscope.dependence.concordance import PseudoObsMatrix, kendall_tau, spearman_rho
from zenscope.dependence.copula import BivTCopulaFit, fit_biv_t
from zenscope.dependence.tail import lambda_from_rho_nu, lambda_nonparam
from zenscope.run.config import ExecConfig
from zenscope.run.handler import TaskHandler
from zenscope.run.utils import exec_decorator
from zenscope.utils.commons import (
    LAMBDA_T_AUX,
    MEASURE_LAMBDA_DIFF,
    MEASURE_LAMBDA_EMP,
    MEASURE_LAMBDA_JOINT,
    MEASURE_LAMBDA_T,
    MEASURE_RHO_S,
    MEASURE_TAU,
    PAIRWISE_MEASURES,
)
from zenscope.utils.exceptions import DependenceError
from zenscope.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from zenscope.dependence.copula import JointTCopulaFit
    from zenscope.run.utils import Result

SIGNED_MEASURES = (MEASURE_TAU, MEASURE_RHO_S)


def _diagonal_value(measure: str) -> float:
    return 0.0 if measure == MEASURE_LAMBDA_DIFF else 1.0


def _lower(mat: np.ndarray) -> list:
    d = mat.shape[0]
    return [None if not np.isfinite(mat[i, j]) else float(mat[i, j]) for i in range(d) for j in range(i)]


def _from_lower(flat: list, d: int, diagonal: float) -> np.ndarray:
    mat = np.full((d, d), np.nan)
    np.fill_diagonal(mat, diagonal)
    k = 0
    for i in range(d):
        for j in range(i):
            val = flat[k]
            mat[i, j] = mat[j, i] = np.nan if val is None else float(val)
            k += 1
    return mat


class DependenceMatrix:
    """
    Symmetric matrix of a pairwise dependence measure.

    Attributes
    ----------
    measure : str
        Measure tag.
    values : np.ndarray
        Symmetric (d, d) matrix, NaN marks a failed pair.
    tickers : list[str]
        Column identifiers.
    aux : dict[str, np.ndarray]
        Auxiliary per-pair matrices.
    failures : list[dict]
        Failed pairs with their reason.
    """

    def __init__(
        self,
        measure: str,
        values: np.ndarray,
        tickers: Sequence[str],
        aux: dict | None = None,
        failures: list | None = None,
        validate: bool = True,
    ) -> None:
        """
        Constructor.

        Range checks are skipped with validate=False, for auxiliary quantities.

        Raises
        ------
        DependenceError
            If the matrix is not square, not symmetric or out of range.
        """
        self.measure = measure
        self.values = np.array(values, dtype=float)
        self.tickers = [str(t) for t in tickers]
        self.aux = {k: np.asarray(v, dtype=float) for k, v in (aux or {}).items()}
        self.failures = list(failures or [])
        d = len(self.tickers)
        if self.values.shape != (d, d):
            raise DependenceError(f"Matrix shape {self.values.shape} does not match {d} tickers.")
        if not np.array_equal(self.values, self.values.T, equal_nan=True):
            raise DependenceError("Dependence matrix is not symmetric.")
        if not validate:
            return
        finite = self.values[np.isfinite(self.values)]
        low = -1.0 if measure in SIGNED_MEASURES else 0.0
        if np.any(finite < low) or np.any(finite > 1.0):
            raise DependenceError(f"Entries of {measure} must lie in [{low:g}, 1].")

    @property
    def d(self) -> int:
        return len(self.tickers)

    def pairs(self) -> list[tuple[int, int, float]]:
        """
        Off-diagonal entries (i, j, value) with i < j, lexicographic order.
        """
        d = self.d
        return [(i, j, float(self.values[i, j])) for i in range(d) for j in range(i + 1, d)]

    def aux_matrix(self, name: str) -> DependenceMatrix:
        """
        Auxiliary quantity as its own matrix, e.g. the pairwise degrees of freedom.

        Raises
        ------
        DependenceError
            If the quantity is not stored.
        """
        if name not in self.aux:
            raise DependenceError(f"Matrix {self.measure} has no auxiliary {name!r}.")
        mat = self.aux[name].copy()
        np.fill_diagonal(mat, np.nan)
        return DependenceMatrix(f"{self.measure}:{name}", mat, self.tickers, validate=False)

    def to_dict(self) -> dict:
        """
        JSON form, lower triangles in row-major order with null for failed pairs.
        """
        return {
            "measure": self.measure,
            "tickers": self.tickers,
            "values": _lower(self.values),
            "aux": {k: _lower(v) for k, v in sorted(self.aux.items())},
            "failures": self.failures,
        }

    @classmethod
    def from_dict(cls, data: dict) -> DependenceMatrix:
        d = len(data["tickers"])
        measure = data["measure"]
        values = _from_lower(data["values"], d, _diagonal_value(measure))
        aux = {k: _from_lower(v, d, np.nan) for k, v in data.get("aux", {}).items()}
        return cls(measure, values, data["tickers"], aux=aux, failures=data.get("failures", []))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.values, index=pd.Index(self.tickers, name="ticker"), columns=self.tickers)

    def __repr__(self) -> str:
        return f"DependenceMatrix(measure={self.measure}, d={self.d}, failures={len(self.failures)})"


#############################
# Pairwise computation
#############################


@exec_decorator
def _pair_value(values: np.ndarray, i: int, j: int, measure: str, corner: float) -> float | dict:
    if measure == MEASURE_TAU:
        return kendall_tau(values[:, i], values[:, j])
    if measure == MEASURE_RHO_S:
        return spearman_rho(values[:, i], values[:, j])
    if measure == MEASURE_LAMBDA_EMP:
        return lambda_nonparam(values[:, [i, j]], corner)
    fit = fit_biv_t(values[:, [i, j]])
    return {
        "value": fit.lam,
        "rho": fit.rho,
        "nu": fit.nu,
        "tau": fit.tau_hat,
        "loglik": fit.loglik,
        "nu_at_bound": float(fit.nu_at_bound),
    }


def _pair_chunk(payload: tuple, chunk: list) -> list[Result]:
    values, measure, corner = payload
    return [_pair_value(values, i, j, measure, corner) for i, j in chunk]


def dependence_matrix(
    U: PseudoObsMatrix,
    measure: str,
    exec_config: ExecConfig | None = None,
    corner: float = 0.1,
) -> DependenceMatrix:
    """
    Compute a measure for every unordered pair of columns.

    Pairs are distributed over the workers in lexicographic order and the
    matrix is assembled in that order, so the result does not depend on the
    number of workers. A failing pair leaves a NaN entry and a failure record.

    Parameters
    ----------
    U : PseudoObsMatrix
        Pseudo-observations with at least two columns.
    measure : str
        One of tau, rho_s, lambda_t, lambda_emp.
    exec_config : ExecConfig
        Parallel settings, sequential by default.
    corner : float
        Corner size of lambda_emp.

    Returns
    -------
    DependenceMatrix
        The matrix, lambda_t also carries rho, nu, tau, loglik and the nu
        bound flag (1.0 or 0.0) per pair.

    Raises
    ------
    DependenceError
        If fewer than two columns are given or the measure is unknown.
    """
    if measure not in PAIRWISE_MEASURES:
        raise DependenceError(f"Unknown measure {measure!r}.")
    d = U.d
    if d < 2:
        raise DependenceError("At least two columns are needed.")
    items = [(i, j) for i in range(d) for j in range(i + 1, d)]
    LOGGER.info(f"Computing {measure} for {len(items)} pairs.")

    handler = TaskHandler(exec_config or ExecConfig())
    results = handler.run(_pair_chunk, (U.values, measure, corner), items)

    values = np.full((d, d), np.nan)
    np.fill_diagonal(values, _diagonal_value(measure))
    aux = {}
    if measure == MEASURE_LAMBDA_T:
        aux = {k: np.full((d, d), np.nan) for k in LAMBDA_T_AUX}
        for mat in aux.values():
            np.fill_diagonal(mat, np.nan)
    failures = []
    for (i, j), res in zip(items, results):
        if not res.ok:
            failures.append({"i": i, "j": j, "reason": res.reason})
            continue
        out = res.artifact
        if isinstance(out, dict):
            values[i, j] = values[j, i] = out["value"]
            for k in LAMBDA_T_AUX:
                aux[k][i, j] = aux[k][j, i] = out[k]
        else:
            values[i, j] = values[j, i] = out
    if failures:
        LOGGER.warning(f"{len(failures)} of {len(items)} pairs failed for {measure}.")
    return DependenceMatrix(measure, values, U.tickers, aux=aux, failures=failures)


#############################
# Derived matrices
#############################


def lambda_matrix_from_joint(fit: JointTCopulaFit) -> DependenceMatrix:
    """
    Tail-dependence coefficients implied by a joint t copula.
    """
    d = fit.d
    values = np.ones((d, d))
    for i in range(d):
        for j in range(i):
            values[i, j] = values[j, i] = lambda_from_rho_nu(min(1.0, max(-1.0, fit.P[i, j])), fit.nu)
    return DependenceMatrix(MEASURE_LAMBDA_JOINT, values, fit.tickers)


def lambda_difference(pairwise: DependenceMatrix, joint: DependenceMatrix) -> DependenceMatrix:
    """
    Absolute difference between pairwise and joint tail-dependence coefficients.

    Raises
    ------
    DependenceError
        If the matrices refer to different tickers.
    """
    if pairwise.tickers != joint.tickers:
        raise DependenceError("Matrices refer to different tickers.")
    values = np.abs(pairwise.values - joint.values)
    np.fill_diagonal(values, 0.0)
    return DependenceMatrix(MEASURE_LAMBDA_DIFF, values, pairwise.tickers)


def lambda_summary(matrix: DependenceMatrix) -> dict:
    """
    Distribution summary of the finite off-diagonal entries.
    """
    iu = np.triu_indices(matrix.d, k=1)
    vals = matrix.values[iu]
    vals = vals[np.isfinite(vals)]
    if vals.size == 0:
        return {"count": 0}
    q = np.quantile(vals, [0.0, 0.25, 0.5, 0.75, 0.9, 1.0])
    return {
        "count": int(vals.size),
        "mean": float(np.mean(vals)),
        "min": float(q[0]),
        "q25": float(q[1]),
        "median": float(q[2]),
        "q75": float(q[3]),
        "q90": float(q[4]),
        "max": float(q[5]),
    }


def biv_fits_from_matrix(matrix: DependenceMatrix) -> dict[tuple[int, int], BivTCopulaFit]:
    """
    Bivariate fits stored in a lambda_t matrix, keyed by (i, j) with i < j.

    Raises
    ------
    DependenceError
        If the matrix is not a lambda_t matrix.
    """
    if matrix.measure != MEASURE_LAMBDA_T or any(k not in matrix.aux for k in LAMBDA_T_AUX):
        raise DependenceError("Bivariate fits can only be read from a lambda_t matrix.")
    out = {}
    for i, j, lam in matrix.pairs():
        if not np.isfinite(lam):
            continue
        out[(i, j)] = BivTCopulaFit(
            matrix.aux["rho"][i, j],
            matrix.aux["nu"][i, j],
            matrix.aux["tau"][i, j],
            matrix.aux["loglik"][i, j],
            lam=lam,
            nu_at_bound=matrix.aux["nu_at_bound"][i, j] == 1.0,
        )
    return out

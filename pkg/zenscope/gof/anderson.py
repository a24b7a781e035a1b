"""
Anderson-Darling test against a reference distribution.
"""
from __future__ import annotations

from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, root_validator
from scipy import stats

from zenscope.dependence.distributions import scaled_t_cdf
from zenscope.margins.diagnostics import ad_pvalue, ad_statistic
from zenscope.margins.objects import DiagnosticScore
from zenscope.utils.exceptions import GofError


class ReferenceCdf(BaseModel):
    """
    Fully specified reference distribution of an Anderson-Darling test.
    """

    kind: Literal["chi2", "scaled_t", "uniform"] = "chi2"
    """Distribution family."""

    df: Optional[float] = 2.0
    """Degrees of freedom, ignored for the uniform distribution."""

    @root_validator
    def _check_df(cls, values: dict) -> dict:
        kind, df = values.get("kind"), values.get("df")
        if kind == "chi2" and not (df is not None and df > 0):
            raise ValueError("chi2 needs positive degrees of freedom")
        if kind == "scaled_t" and not (df is not None and df > 2):
            raise ValueError("scaled_t needs degrees of freedom above 2")
        return values

    def cdf(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate the distribution function.
        """
        x = np.asarray(x, dtype=float)
        if self.kind == "chi2":
            return stats.chi2.cdf(x, self.df)
        if self.kind == "scaled_t":
            return np.asarray(scaled_t_cdf(x, self.df))
        return np.clip(x, 0.0, 1.0)

    def median(self) -> float:
        if self.kind == "chi2":
            return float(stats.chi2.ppf(0.5, self.df))
        if self.kind == "scaled_t":
            return 0.0
        return 0.5


def anderson_darling(x: np.ndarray, ref: ReferenceCdf, column: Optional[int] = None) -> DiagnosticScore:
    """
    Anderson-Darling test of a sample against a reference distribution.

    Parameters
    ----------
    x : np.ndarray
        Sample.
    ref : ReferenceCdf
        Reference distribution.
    column : int
        Optional column index stored in the score.

    Returns
    -------
    DiagnosticScore
        Statistic and p-value.

    Raises
    ------
    GofError
        If the sample is empty.
    """
    x = np.asarray(x, dtype=float).ravel()
    if x.size == 0:
        raise GofError("Anderson-Darling test of an empty sample.")
    a2 = ad_statistic(ref.cdf(x))
    return DiagnosticScore(column, a2, ad_pvalue(a2, x.size))

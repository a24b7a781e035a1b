"""
Pairwise against joint t copula comparison.

Every pair is tested twice: once under its own bivariate t copula fit and once
under the bivariate margin (P_ij, nu) of the joint t copula. Each test maps the
Rosenblatt transform to chi-square values and runs an Anderson-Darling test
against the chi-square distribution with 2 degrees of freedom.
"""
from __future__ import annotations

import typing
from collections import Counter

import numpy as np

from zenscope.dependence.matrix import DependenceMatrix
from zenscope.gof.anderson import ReferenceCdf, anderson_darling
from zenscope.gof.rosenblatt import chisq_map, rosenblatt_biv_t
from zenscope.metadata.report import BaseReport
from zenscope.run.config import ExecConfig
from zenscope.run.handler import TaskHandler
from zenscope.run.utils import exec_decorator
from zenscope.utils.commons import MEASURE_GOF_MIN_P
from zenscope.utils.exceptions import GofError
from zenscope.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from zenscope.dependence.concordance import PseudoObsMatrix
    from zenscope.dependence.copula import BivTCopulaFit, JointTCopulaFit
    from zenscope.run.utils import Result

BOTH_POOR = "both-poor"
PAIRWISE_OK_JOINT_POOR = "pairwise-ok-joint-poor"
JOINT_OK_PAIRWISE_POOR = "joint-ok-pairwise-poor"
BOTH_OK = "both-ok"
CATEGORIES = (BOTH_POOR, PAIRWISE_OK_JOINT_POOR, JOINT_OK_PAIRWISE_POOR, BOTH_OK)

CHI2_2 = ReferenceCdf(kind="chi2", df=2)


class PairGofReport(BaseReport):
    """
    Goodness-of-fit outcome of a pair.

    Attributes
    ----------
    i, j : int
        Pair indices, i < j.
    ticker_i, ticker_j : str
        Pair tickers.
    p_pairwise : float | None
        P-value under the pairwise fit.
    p_joint : float | None
        P-value under the joint model's bivariate margin.
    category : str | None
        Category, None when the pair could not be tested.
    reason : str | None
        Failure reason of an untested pair.
    """

    uncorrected = True

    def __init__(
        self,
        i: int,
        j: int,
        ticker_i: str,
        ticker_j: str,
        p_pairwise: float | None = None,
        p_joint: float | None = None,
        category: str | None = None,
        reason: str | None = None,
        duration: float | None = None,
    ) -> None:
        super().__init__(duration)
        self.i = i
        self.j = j
        self.ticker_i = ticker_i
        self.ticker_j = ticker_j
        self.p_pairwise = p_pairwise
        self.p_joint = p_joint
        self.category = category
        self.reason = reason

    @property
    def min_p(self) -> float:
        """
        Smaller of the two p-values, infinity for untested pairs.
        """
        if self.category is None:
            return np.inf
        return min(self.p_pairwise, self.p_joint)

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "ticker_i": self.ticker_i,
            "ticker_j": self.ticker_j,
            "p_pairwise": self.p_pairwise,
            "p_joint": self.p_joint,
            "category": self.category,
            "reason": self.reason,
            "uncorrected": self.uncorrected,
        }

    @classmethod
    def from_dict(cls, data: dict) -> PairGofReport:
        keys = ("i", "j", "ticker_i", "ticker_j", "p_pairwise", "p_joint", "category", "reason")
        return cls(**{k: data.get(k) for k in keys})


def categorize(p_pairwise: float, p_joint: float, threshold: float) -> str:
    """
    Category of a pair from its two p-values.
    """
    pair_poor = p_pairwise < threshold
    joint_poor = p_joint < threshold
    if pair_poor and joint_poor:
        return BOTH_POOR
    if joint_poor:
        return PAIRWISE_OK_JOINT_POOR
    if pair_poor:
        return JOINT_OK_PAIRWISE_POOR
    return BOTH_OK


def pair_pvalue(u: np.ndarray, rho: float, nu: float, reverse: bool = False) -> float:
    """
    Anderson-Darling p-value of the chi-square mapped Rosenblatt transform.
    """
    w = chisq_map(rosenblatt_biv_t(u, rho, nu, reverse=reverse))
    return anderson_darling(w, CHI2_2).p_value


@exec_decorator
def _compare_pair(payload: tuple, item: tuple) -> tuple[float, float]:
    values, P, nu_joint, reverse = payload
    i, j, rho_ij, nu_ij = item
    u = values[:, [i, j]]
    rho_joint = float(np.clip(P[i, j], -1.0 + 1e-12, 1.0 - 1e-12))
    return pair_pvalue(u, rho_ij, nu_ij, reverse), pair_pvalue(u, rho_joint, nu_joint, reverse)


def _compare_chunk(payload: tuple, chunk: list) -> list[Result]:
    return [_compare_pair(payload, item) for item in chunk]


def compare_models(
    U: PseudoObsMatrix,
    pairwise: dict[tuple[int, int], BivTCopulaFit],
    joint: JointTCopulaFit,
    threshold: float = 0.05,
    pairs: list[tuple[int, int]] | None = None,
    reverse: bool = False,
    exec_config: ExecConfig | None = None,
) -> list[PairGofReport]:
    """
    Compare pairwise and joint t copula fits pair by pair.

    Parameters
    ----------
    U : PseudoObsMatrix
        Pseudo-observations.
    pairwise : dict[tuple[int, int], BivTCopulaFit]
        Bivariate fits keyed by (i, j), i < j.
    joint : JointTCopulaFit
        Joint fit over the same columns.
    threshold : float
        P-value cutoff.
    pairs : list[tuple[int, int]]
        Pairs to test, all pairs by default.
    reverse : bool
        Condition on the higher index variate.
    exec_config : ExecConfig
        Parallel settings.

    Returns
    -------
    list[PairGofReport]
        Reports by ascending smaller p-value, ties by pair, untested pairs last.

    Raises
    ------
    GofError
        If the joint fit and the pseudo-observations disagree.
    """
    if joint.tickers != U.tickers:
        raise GofError("Joint fit and pseudo-observations refer to different tickers.")
    if not 0.0 <= threshold <= 1.0:
        raise GofError(f"Threshold must lie in [0, 1], got {threshold}.")
    d = U.d
    if pairs is None:
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    pairs = [(min(i, j), max(i, j)) for i, j in pairs]

    reports, items = [], []
    for i, j in pairs:
        fit = pairwise.get((i, j))
        if fit is None:
            LOGGER.warning(f"No pairwise fit for ({U.tickers[i]}, {U.tickers[j]}).")
            reports.append(PairGofReport(i, j, U.tickers[i], U.tickers[j], reason="missing pairwise fit"))
        else:
            items.append((i, j, fit.rho, fit.nu))
    LOGGER.info(f"Testing {len(items)} pairs against pairwise and joint fits.")

    handler = TaskHandler(exec_config or ExecConfig())
    results = handler.run(_compare_chunk, (U.values, joint.P, joint.nu, reverse), items)
    for (i, j, _, _), res in zip(items, results):
        report = PairGofReport(i, j, U.tickers[i], U.tickers[j], duration=res.duration)
        if res.ok:
            report.p_pairwise, report.p_joint = res.artifact
            report.category = categorize(report.p_pairwise, report.p_joint, threshold)
        else:
            LOGGER.warning(f"Test failed for ({U.tickers[i]}, {U.tickers[j]}): {res.reason}")
            report.reason = res.reason
        reports.append(report)
    return sorted(reports, key=lambda r: (r.min_p, r.i, r.j))


def report_table(reports: list[PairGofReport]) -> dict[str, int]:
    """
    Number of pairs per category, untested pairs under "missing".
    """
    counts = Counter(r.category or "missing" for r in reports)
    table = {c: counts.get(c, 0) for c in CATEGORIES}
    table["missing"] = counts.get("missing", 0)
    return table


def pvalue_matrix(reports: list[PairGofReport], tickers: list[str]) -> DependenceMatrix:
    """
    Smaller p-value of every tested pair as a matrix, NaN for untested pairs.

    Ranked ascending, it puts the worst fitting pairs first.
    """
    d = len(tickers)
    values = np.full((d, d), np.nan)
    np.fill_diagonal(values, 1.0)
    for r in reports:
        if r.category is not None:
            values[r.i, r.j] = values[r.j, r.i] = r.min_p
    return DependenceMatrix(MEASURE_GOF_MIN_P, values, tickers)

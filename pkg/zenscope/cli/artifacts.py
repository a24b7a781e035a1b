"""
Published schemas of the JSON artifacts.

Every JSON artifact is a stamped blob whose ``contents`` follow the schema of
its ``kind``.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ValidationError, root_validator, validator

from zenscope.utils.commons import LAMBDA_T_AUX, MEASURE_LAMBDA_T
from zenscope.utils.exceptions import ConfigError, StoreError


class ArtifactBlob(BaseModel):
    """
    Stamped envelope shared by all JSON artifacts.
    """

    zenscope_version: str
    """Version of the tool that wrote the artifact."""

    seed: Optional[int]
    """Seed of the producing run."""

    config_hash: str
    """Hash of the producing configuration."""

    kind: str
    """Artifact kind."""

    contents: Union[dict, list]
    """Payload, validated against the schema of the kind."""


#############################
# Dataset
#############################


class IngestContents(BaseModel):
    """
    Summary of the ingestion of a price file.
    """

    n_rows: int
    """Number of price rows."""

    retained: List[str]
    """Tickers kept by the completeness filter."""

    dropped: List[str]
    """Tickers removed by the completeness filter."""

    missing_fraction: Dict[str, float]
    """Missing fraction of every input ticker."""

    max_missing: float
    """Completeness threshold."""

    first_date: str
    last_date: str


#############################
# Margins
#############################


class MarginalFitModel(BaseModel):
    """
    Marginal fit of one column.
    """

    ticker: str
    mu: float
    phi: float
    theta: float
    alpha0: float
    alpha1: float
    beta: float
    nu: float
    loglik: float
    converged: bool

    std_errors: Dict[str, Optional[float]]
    """Asymptotic standard errors, null where the Hessian is not usable."""

    resid_mean: float
    """Mean of the standardized residuals."""

    resid_var: float
    """Population variance of the standardized residuals."""


class MarginsContents(BaseModel):
    fits: List[MarginalFitModel]


class ScoreModel(BaseModel):
    """
    Diagnostic score of a series.
    """

    column: int
    ticker: Optional[str]
    statistic: float
    p_value: Optional[float]
    lag: Optional[int]
    uncorrected: bool


class DiagnosticsContents(BaseModel):
    """
    Orderings of the residual series.
    """

    max_lag: int
    """Largest Ljung-Box lag."""

    ljung_box: List[ScoreModel]
    """Residuals by ascending Ljung-Box p-value."""

    ljung_box_squared: List[ScoreModel]
    """Squared residuals by ascending Ljung-Box p-value."""

    anderson_darling: List[ScoreModel]
    """Residuals by decreasing Anderson-Darling statistic against the fitted t."""


#############################
# Dependence
#############################


class FailureModel(BaseModel):
    i: int
    j: int
    reason: Optional[str]


class DependenceMatrixContents(BaseModel):
    """
    Dependence matrix, lower triangles in row-major order.
    """

    measure: str
    tickers: List[str]
    values: List[Optional[float]]
    aux: Dict[str, List[Optional[float]]] = {}
    failures: List[FailureModel] = []

    summary: Dict[str, float] = {}
    """Distribution summary of the off-diagonal entries."""

    @root_validator(skip_on_failure=True)
    def _triangle(cls, values: dict) -> dict:
        d = len(values["tickers"])
        size = d * (d - 1) // 2
        if len(values["values"]) != size or any(len(v) != size for v in values["aux"].values()):
            raise ValueError(f"lower triangles of {d} tickers need {size} entries")
        if values["measure"] == MEASURE_LAMBDA_T:
            missing = [k for k in LAMBDA_T_AUX if k not in values["aux"]]
            if missing:
                raise ValueError(f"lambda_t matrices need the auxiliary {', '.join(missing)}")
            if any(v not in (None, 0.0, 1.0) for v in values["aux"]["nu_at_bound"]):
                raise ValueError("nu_at_bound entries must be 0, 1 or null")
        return values


class JointFitContents(BaseModel):
    """
    Joint t copula fit.
    """

    tickers: List[str]
    nu: float
    loglik: float
    projected: bool
    nu_at_bound: bool
    min_eigenvalue: float
    P: List[List[float]]

    @validator("P")
    def _square(cls, value: list, values: dict) -> list:
        d = len(values.get("tickers", []))
        if len(value) != d or any(len(row) != d for row in value):
            raise ValueError(f"P must be {d}x{d}")
        return value


#############################
# Goodness of fit
#############################


class PairGofModel(BaseModel):
    i: int
    j: int
    ticker_i: str
    ticker_j: str
    p_pairwise: Optional[float]
    p_joint: Optional[float]
    category: Optional[str]
    reason: Optional[str]
    uncorrected: bool


class GofContents(BaseModel):
    """
    Pair by pair comparison of the pairwise and joint fits.
    """

    threshold: float
    reverse: bool
    table: Dict[str, int]
    """Number of pairs per category."""

    reports: List[PairGofModel]
    """Reports by ascending smaller p-value."""


#############################
# Zenpath
#############################


class ZenpathContents(BaseModel):
    """
    Zenpath over tickers.
    """

    source: str
    """Matrix the pairs were ranked on."""

    order: str
    """Pair ordering."""

    groups: List[List[str]]
    scores: Optional[List[List[Optional[float]]]]
    labels: Optional[List[str]]


SCHEMAS: dict = {
    "ingest": IngestContents,
    "margins": MarginsContents,
    "diagnostics": DiagnosticsContents,
    "depmat": DependenceMatrixContents,
    "joint": JointFitContents,
    "gof": GofContents,
    "zenpath": ZenpathContents,
}


def schema_json(kind: str) -> str:
    """
    JSON schema of an artifact kind.

    Raises
    ------
    ConfigError
        On an unknown kind.
    """
    try:
        return SCHEMAS[kind].schema_json(indent=4)
    except KeyError as exc:
        raise ConfigError(f"Unknown artifact kind {kind!r}, expected one of {', '.join(SCHEMAS)}.") from exc


def validate_artifact(data: dict) -> BaseModel:
    """
    Validate a stamped JSON artifact against the schema of its kind.

    Returns
    -------
    BaseModel
        Parsed contents.

    Raises
    ------
    StoreError
        If the envelope or the contents do not validate.
    """
    try:
        blob = ArtifactBlob.parse_obj(data)
        if blob.kind not in SCHEMAS:
            raise StoreError(f"Unknown artifact kind {blob.kind!r}.")
        return SCHEMAS[blob.kind].parse_obj(blob.contents)
    except ValidationError as exc:
        raise StoreError(f"Invalid artifact: {exc}") from exc

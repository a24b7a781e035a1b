"""
Run configuration objects module.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, validator

from zenscope.utils.commons import PAIRWISE_MEASURES, ZENPATH_SOURCES, ZENPLOT_FILE
from zenscope.utils.exceptions import ConfigError
from zenscope.utils.utils import config_hash


class ExecConfig(BaseModel):
    """
    Configuration of the parallel execution of independent tasks.
    """

    threads: int = 1
    """Number of workers. One means sequential execution in the calling thread."""

    executor: Literal["process", "thread"] = "process"
    """Kind of pool used when threads is greater than one."""

    chunks_per_worker: int = 4
    """Number of task chunks submitted per worker."""

    @validator("threads", "chunks_per_worker")
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value


class PipelineConfig(BaseModel):
    """
    Pipeline configuration shared by all CLI commands.
    """

    prices: Optional[str] = None
    """Path of the price CSV."""

    sectors: Optional[str] = None
    """Path of the sector CSV."""

    max_missing: float = 0.2
    """Maximal fraction of missing prices a column may have to be retained."""

    measure: str = "lambda_t"
    """Pairwise dependence measure."""

    source: Optional[str] = None
    """Matrix the zenpath ranks pairs on, the measure if omitted."""

    order: Literal["desc", "asc", "extremes", "chain", "all"] = "desc"
    """Pair ordering used to build the zenpath."""

    top: int = 10
    """Number of pairs taken from the top of the ordering, 0 for all."""

    bottom: int = 10
    """Number of pairs taken from the bottom of the ordering (extremes only)."""

    sector_mode: Literal["any", "within", "cross", "per-sector"] = "any"
    """Sector filter applied to the pairs."""

    width: int = 10
    """Maximal number of 2D columns of a zenplot."""

    panel: Literal["scatter", "acf", "qq"] = "scatter"
    """Panel kind of the zenplot command."""

    dirs: Optional[str] = None
    """Direction sequence of the zenplot, e.g. "rdrd", the default zigzag if omitted."""

    style: Optional[str] = None
    """Path of a JSON style override file."""

    plot_name: str = ZENPLOT_FILE
    """Filename of the zenplot command output."""

    gof_threshold: float = 0.05
    """P-value cutoff of the model comparison."""

    reverse_conditioning: bool = False
    """Condition the Rosenblatt transform on the higher index variate."""

    nsim: int = 1000
    """Number of simulated samples of the Q-Q envelopes."""

    max_lag: int = 30
    """Largest lag of the serial dependence diagnostics."""

    diag_panels: int = 16
    """Number of series shown in the diagnostic zenplots."""

    corner: float = 0.1
    """Corner size of the nonparametric tail-dependence estimator."""

    restarts: int = 3
    """Random restarts of the marginal optimizer."""

    synth_d: int = 10
    """Number of synthetic series."""

    synth_n_obs: int = 756
    """Number of synthetic price rows."""

    synth_sectors: int = 3
    """Number of synthetic sectors."""

    synth_gap_frac: float = 0.2
    """Share of synthetic columns starting with missing prices."""

    synth_incomplete: int = 1
    """Number of synthetic columns failing the default completeness filter."""

    seed: Optional[int] = None
    """Seed of every stochastic stage."""

    threads: int = 1
    """Number of workers."""

    out_dir: str = "zenscope-out"
    """Output directory."""

    @validator("max_missing", "gof_threshold", "synth_gap_frac")
    def _fraction(cls, value: float) -> float:
        if not 0.0 <= value <= 1.0:
            raise ValueError("must lie in [0, 1]")
        return value

    @validator("corner")
    def _corner(cls, value: float) -> float:
        if not 0.0 < value <= 0.5:
            raise ValueError("must lie in (0, 0.5]")
        return value

    @validator("measure")
    def _measure(cls, value: str) -> str:
        if value not in PAIRWISE_MEASURES:
            raise ValueError(f"unknown measure {value!r}, expected one of {', '.join(PAIRWISE_MEASURES)}")
        return value

    @validator("width")
    def _width(cls, value: int) -> int:
        if value < 2:
            raise ValueError("must be at least 2")
        return value

    @validator("source")
    def _source(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in ZENPATH_SOURCES:
            raise ValueError(f"unknown source {value!r}, expected one of {', '.join(ZENPATH_SOURCES)}")
        return value

    @validator("dirs")
    def _dirs(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and set(value) - set("udlr"):
            raise ValueError("directions must be made of u, d, l, r")
        return value

    @validator(
        "top", "bottom", "max_lag", "diag_panels", "restarts", "synth_d", "synth_n_obs", "synth_sectors", "synth_incomplete"
    )
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("must not be negative")
        return value

    @validator("nsim")
    def _nsim(cls, value: int) -> int:
        if value < 100:
            raise ValueError("must be at least 100")
        return value

    @validator("threads")
    def _threads(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value

    def require_seed(self, stage: str) -> int:
        """
        Return the seed, failing if a stochastic stage runs without one.

        Parameters
        ----------
        stage : str
            Name of the stage, used in the message.

        Returns
        -------
        int
            The seed.

        Raises
        ------
        ConfigError
            If no seed is configured.
        """
        if self.seed is None:
            raise ConfigError(f"Stage '{stage}' is stochastic, please provide --seed.")
        return self.seed

    def exec_config(self) -> ExecConfig:
        """
        Execution configuration derived from the thread count.
        """
        return ExecConfig(threads=self.threads)

    def digest(self) -> str:
        """
        Hash of the configuration, ignoring thread count and output directory.
        """
        return config_hash(self.dict(exclude={"threads", "out_dir"}))

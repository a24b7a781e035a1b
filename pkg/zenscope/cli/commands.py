"""
CLI commands.

Each command opens a Run on the output directory and executes one or more
stages. Stages exchange data only through the artifacts of the store, so any
command can resume from the artifacts of earlier ones.
"""
from __future__ import annotations

import sys
import traceback
import typing
from typing import Callable, Optional

import numpy as np

from zenscope.dataset.io import load_prices, load_sectors
from zenscope.dataset.objects import ReturnMatrix
from zenscope.dataset.ops import fill_missing, filter_by_completeness, neg_log_returns
from zenscope.dataset.synthetic import synthetic_market
from zenscope.dependence.concordance import PseudoObsMatrix, pseudo_observations
from zenscope.dependence.copula import JointTCopulaFit, fit_joint_t
from zenscope.dependence.matrix import (
    DependenceMatrix,
    biv_fits_from_matrix,
    dependence_matrix,
    lambda_difference,
    lambda_matrix_from_joint,
    lambda_summary,
)
from zenscope.gof.compare import PairGofReport, compare_models, pvalue_matrix, report_table
from zenscope.margins.diagnostics import acf, marginal_order, serial_dependence_order
from zenscope.margins.envelope import qq_envelope
from zenscope.margins.garch import arma_garch_std_errors, fit_margins, residual_matrix, standardized_residual_moments
from zenscope.run.run import Run
from zenscope.run.run_info import RunInfo
from zenscope.stores.local import LocalOutputStore
from zenscope.utils.commons import (
    DIAGNOSTICS_FILE,
    GOF_FILE,
    INGEST_FILE,
    JOINT_FILE,
    MARGINS_FILE,
    MEASURE_LAMBDA_T,
    POBS_FILE,
    PRICES_CLEAN_FILE,
    PRICES_FILE,
    RESIDUALS_FILE,
    RETURNS_FILE,
    SECTORS_FILE,
    SOURCE_GOF,
    SOURCE_NU,
    ZENPATH_FILE,
)
from zenscope.utils.exceptions import ConfigError, ZenscopeError
from zenscope.utils.logger import LOGGER
from zenscope.utils.utils import build_uuid
from zenscope.zenpath.connect import connect_pairs, per_sector_paths
from zenscope.zenpath.eulerian import eulerian_all_pairs
from zenscope.zenpath.objects import PairList, Zenpath
from zenscope.zenpath.ranking import extreme_pairs, rank_pairs, sector_filter
from zenscope.zenplot.layout import layout, layout_sequence
from zenscope.zenplot.panels import acf_panel, qq_panel, scatter_panel
from zenscope.zenplot.render import render, render_matrix
from zenscope.zenplot.style import StyleConfig, load_style

if typing.TYPE_CHECKING:
    from zenscope.dataset.objects import SectorMap
    from zenscope.run.config import PipelineConfig

Stage = Callable[[Run, "PipelineConfig"], None]


#############################
# Artifact helpers
#############################


def _matrix_file(measure: str, ext: str = "json") -> str:
    return f"depmat_{measure}.{ext}"


def _read_pobs(run: Run) -> PseudoObsMatrix:
    return PseudoObsMatrix.from_frame(run.store.read_frame(POBS_FILE))


def _read_matrix(run: Run, measure: str) -> DependenceMatrix:
    return DependenceMatrix.from_dict(run.store.read_blob(_matrix_file(measure)))


def _read_sectors(run: Run, config: PipelineConfig) -> Optional[SectorMap]:
    """
    Sector map given on the command line, else the one stored by synth or ingest.
    """
    if config.sectors is not None:
        return load_sectors(config.sectors)
    if run.store.exists(SECTORS_FILE):
        return load_sectors(run.store.artifact(SECTORS_FILE))
    return None


def _style(config: PipelineConfig) -> StyleConfig:
    return load_style(config.style) if config.style is not None else StyleConfig()


def _persist_matrix(run: Run, matrix: DependenceMatrix, sectors: Optional[SectorMap], style: StyleConfig) -> None:
    """
    Write a matrix as JSON, CSV and greyscale heatmap.
    """
    contents = matrix.to_dict()
    contents["summary"] = lambda_summary(matrix)
    run.persist_json("depmat", contents, _matrix_file(matrix.measure))
    run.persist_frame("depmat", matrix.to_frame(), _matrix_file(matrix.measure, "csv"), index_label="ticker")
    if sectors is not None and any(t not in sectors for t in matrix.tickers):
        LOGGER.warning("Some tickers have no sector, the heatmap is not grouped.")
        sectors = None
    run.persist_svg(
        "heatmap",
        lambda stamp: render_matrix(matrix, sectors, style, stamp),
        f"heatmap_{matrix.measure}.svg",
    )


def _pairwise_lambda(run: Run, config: PipelineConfig, U: PseudoObsMatrix) -> DependenceMatrix:
    """
    Stored lambda_t matrix, computed and stored first if missing.
    """
    if run.store.exists(_matrix_file(MEASURE_LAMBDA_T)):
        return _read_matrix(run, MEASURE_LAMBDA_T)
    LOGGER.info("No pairwise lambda_t matrix stored, computing it.")
    matrix = dependence_matrix(U, MEASURE_LAMBDA_T, config.exec_config(), config.corner)
    _persist_matrix(run, matrix, _read_sectors(run, config), _style(config))
    return matrix


#############################
# Stages
#############################


def stage_synth(run: Run, config: PipelineConfig) -> None:
    """
    Simulate a market and store its prices and sectors.
    """
    seed = config.require_seed("synth")
    prices, sectors = synthetic_market(
        config.synth_d,
        config.synth_n_obs,
        config.synth_sectors,
        seed,
        gap_frac=config.synth_gap_frac,
        n_incomplete=config.synth_incomplete,
    )
    run.persist_frame("prices", prices.to_frame(), PRICES_FILE)
    run.persist_frame("sectors", sectors.to_frame(), SECTORS_FILE, index_label="ticker")


def stage_ingest(run: Run, config: PipelineConfig) -> None:
    """
    Filter, fill and difference the prices.
    """
    if config.prices is not None:
        source = config.prices
    elif run.store.exists(PRICES_FILE):
        source = run.store.artifact(PRICES_FILE)
    else:
        raise ConfigError("No price file, pass --prices or run synth first.")
    prices = load_prices(source)
    LOGGER.info(f"Loaded {prices} from {source}.")
    kept = filter_by_completeness(prices, config.max_missing)
    filled = fill_missing(kept)
    returns = neg_log_returns(filled)

    frac = prices.missing_fraction()
    contents = {
        "n_rows": len(prices.dates),
        "retained": kept.tickers,
        "dropped": [t for t in prices.tickers if t not in kept.tickers],
        "missing_fraction": dict(zip(prices.tickers, frac.tolist())),
        "max_missing": config.max_missing,
        "first_date": prices.dates[0],
        "last_date": prices.dates[-1],
    }
    run.persist_json("ingest", contents, INGEST_FILE)
    run.persist_frame("prices", filled.to_frame(), PRICES_CLEAN_FILE)
    run.persist_frame("returns", returns.to_frame(), RETURNS_FILE)
    if config.sectors is not None:
        run.persist_frame("sectors", load_sectors(config.sectors).to_frame(), SECTORS_FILE, index_label="ticker")


def stage_degarch(run: Run, config: PipelineConfig) -> None:
    """
    Fit the marginal models and store residuals and pseudo-observations.
    """
    seed = config.require_seed("degarch")
    returns = ReturnMatrix.from_frame(run.store.read_frame(RETURNS_FILE))
    fits = fit_margins(returns, config.exec_config(), seed, config.restarts)
    rows = []
    for j, fit in enumerate(fits):
        row = fit.to_dict()
        row["std_errors"] = arma_garch_std_errors(returns.values[:, j], fit)
        row["resid_mean"], row["resid_var"] = standardized_residual_moments(fit)
        rows.append(row)
    residuals = residual_matrix(fits, returns)
    run.persist_json("margins", {"fits": rows}, MARGINS_FILE)
    run.persist_frame("residuals", residuals, RESIDUALS_FILE)
    run.persist_frame("pobs", pseudo_observations(residuals).to_frame(), POBS_FILE)


def _acf_plot(z: np.ndarray, columns: list[int], tickers: list[str], config: PipelineConfig, squared: bool) -> Callable:
    panels = []
    for j in columns:
        res = acf(z[:, j] ** 2 if squared else z[:, j], config.max_lag)
        panels.append(acf_panel(res.values[1:], res.band))
    dirs = list(config.dirs) if config.dirs else None
    grid = layout_sequence(len(columns), dirs, config.width, names=tickers, variates=columns)
    style = _style(config)
    return lambda stamp: render(grid, panels, style, stamp)


def _qq_plot(
    z: np.ndarray, columns: list[int], nus: list[float], tickers: list[str], config: PipelineConfig
) -> Callable:
    seed = config.require_seed("Q-Q envelopes")
    panels = []
    for j in columns:
        env = qq_envelope(nus[j], z.shape[0], config.nsim, seed=seed + j)
        panels.append(qq_panel(z[:, j], nus[j], env))
    dirs = list(config.dirs) if config.dirs else None
    grid = layout_sequence(len(columns), dirs, config.width, names=tickers, variates=columns)
    style = _style(config)
    return lambda stamp: render(grid, panels, style, stamp)


def _read_residuals(run: Run) -> tuple[np.ndarray, list[str], list[float]]:
    frame = run.store.read_frame(RESIDUALS_FILE)
    nus = [f["nu"] for f in run.store.read_blob(MARGINS_FILE)["fits"]]
    return frame.to_numpy(dtype=float), list(frame.columns.astype(str)), nus


def stage_diagnose(run: Run, config: PipelineConfig) -> None:
    """
    Order the residual series and draw the ACF and Q-Q zenplots.
    """
    z, tickers, nus = _read_residuals(run)
    lb = serial_dependence_order(z, config.max_lag, tickers=tickers)
    lb2 = serial_dependence_order(z, config.max_lag, squared=True, tickers=tickers)
    ad = marginal_order(z, nus, tickers)
    contents = {
        "max_lag": config.max_lag,
        "ljung_box": [s.to_dict() for s in lb],
        "ljung_box_squared": [s.to_dict() for s in lb2],
        "anderson_darling": [s.to_dict() for s in ad],
    }
    run.persist_json("diagnostics", contents, DIAGNOSTICS_FILE)

    k = min(config.diag_panels, len(tickers))
    if k == 0:
        return
    run.persist_svg("zenplot", _acf_plot(z, [s.column for s in lb[:k]], tickers, config, False), "acf.svg")
    run.persist_svg("zenplot", _acf_plot(z, [s.column for s in lb2[:k]], tickers, config, True), "acf_squared.svg")
    run.persist_svg("zenplot", _qq_plot(z, [s.column for s in ad[:k]], nus, tickers, config), "qq.svg")


def stage_depmat(run: Run, config: PipelineConfig) -> None:
    """
    Compute the configured pairwise measure.
    """
    U = _read_pobs(run)
    matrix = dependence_matrix(U, config.measure, config.exec_config(), config.corner)
    _persist_matrix(run, matrix, _read_sectors(run, config), _style(config))


def stage_fit_joint(run: Run, config: PipelineConfig) -> None:
    """
    Fit the joint t copula and compare its tail dependence with the pairwise fits.
    """
    U = _read_pobs(run)
    joint = fit_joint_t(U, config.exec_config())
    run.persist_json("joint", joint.to_dict(), JOINT_FILE)
    sectors, style = _read_sectors(run, config), _style(config)
    lam_joint = lambda_matrix_from_joint(joint)
    _persist_matrix(run, lam_joint, sectors, style)
    _persist_matrix(run, lambda_difference(_pairwise_lambda(run, config, U), lam_joint), sectors, style)


def stage_gof(run: Run, config: PipelineConfig) -> None:
    """
    Test every pair under its pairwise fit and under the joint model.
    """
    U = _read_pobs(run)
    joint = JointTCopulaFit.from_dict(run.store.read_blob(JOINT_FILE))
    fits = biv_fits_from_matrix(_pairwise_lambda(run, config, U))
    reports = compare_models(
        U,
        fits,
        joint,
        threshold=config.gof_threshold,
        reverse=config.reverse_conditioning,
        exec_config=config.exec_config(),
    )
    contents = {
        "threshold": config.gof_threshold,
        "reverse": config.reverse_conditioning,
        "table": report_table(reports),
        "reports": [r.to_dict() for r in reports],
    }
    run.persist_json("gof", contents, GOF_FILE)


def _source_matrix(run: Run, source: str) -> DependenceMatrix:
    if source == SOURCE_NU:
        return _read_matrix(run, MEASURE_LAMBDA_T).aux_matrix("nu")
    if source == SOURCE_GOF:
        reports = [PairGofReport.from_dict(r) for r in run.store.read_blob(GOF_FILE)["reports"]]
        return pvalue_matrix(reports, _read_pobs(run).tickers)
    return _read_matrix(run, source)


def build_zenpath(matrix: DependenceMatrix, config: PipelineConfig, sectors: Optional[SectorMap] = None) -> Zenpath:
    """
    Zenpath of a matrix following the ordering and sector settings.

    Raises
    ------
    ConfigError
        If a sector mode is requested without a sector map.
    """
    d = matrix.d
    if config.order == "chain":
        return Zenpath([list(range(d))], [[float(matrix.values[k, k + 1]) for k in range(d - 1)]])
    if config.order == "all":
        return eulerian_all_pairs(d)

    if config.sector_mode != "any" and sectors is None:
        raise ConfigError(f"Sector mode {config.sector_mode!r} needs a sector file.")
    if config.sector_mode == "per-sector":
        return per_sector_paths(matrix, sectors.restrict(matrix.tickers))
    predicate = None
    if config.sector_mode in ("within", "cross"):
        predicate = sector_filter(sectors.restrict(matrix.tickers), matrix.tickers, config.sector_mode)

    if config.order == "extremes":
        ranked = extreme_pairs(rank_pairs(matrix, "desc", predicate), config.top, config.bottom)
    else:
        ranked = rank_pairs(matrix, config.order, predicate)
        if config.top:
            ranked = PairList(ranked[: config.top])
    return connect_pairs(ranked)


def stage_zenpath(run: Run, config: PipelineConfig) -> None:
    """
    Build the zenpath of the configured source matrix.
    """
    source = config.source or config.measure
    matrix = _source_matrix(run, source)
    sectors = _read_sectors(run, config) if config.sector_mode != "any" else None
    path = build_zenpath(matrix, config, sectors)
    LOGGER.info(f"Zenpath with {len(path.pairs())} pairs in {len(path)} groups.")
    contents = {"source": source, "order": config.order, "labels": None}
    contents.update(path.to_dict(matrix.tickers))
    run.persist_json("zenpath", contents, ZENPATH_FILE)


def stage_zenplot(run: Run, config: PipelineConfig) -> None:
    """
    Render the zenplot of the stored zenpath, or a diagnostic zenplot.
    """
    if config.panel == "scatter":
        U = _read_pobs(run)
        path = Zenpath.from_dict(run.store.read_blob(ZENPATH_FILE), U.tickers)
        grid = layout(path, list(config.dirs) if config.dirs else None, config.width, names=U.tickers)
        panels = [scatter_panel(U.values[:, c.x], U.values[:, c.y]) for c in grid.panels()]
        style = _style(config)
        run.persist_svg("zenplot", lambda stamp: render(grid, panels, style, stamp), config.plot_name)
        return

    z, tickers, nus = _read_residuals(run)
    k = min(config.diag_panels, len(tickers))
    if config.panel == "acf":
        order = serial_dependence_order(z, config.max_lag, tickers=tickers)
        plot = _acf_plot(z, [s.column for s in order[:k]], tickers, config, False)
    else:
        order = marginal_order(z, nus, tickers)
        plot = _qq_plot(z, [s.column for s in order[:k]], nus, tickers, config)
    run.persist_svg("zenplot", plot, config.plot_name)


#############################
# Commands
#############################


def execute(command: str, config: PipelineConfig, *stages: Stage) -> int:
    """
    Run stages inside a Run and map failures to exit codes.

    Returns
    -------
    int
        0 on success, 1 on a user error, 2 on an internal error.
    """
    store = LocalOutputStore(config.out_dir)
    run = Run(RunInfo(build_uuid(), command, store.path, config), store)
    try:
        with run:
            for stage in stages:
                LOGGER.info(f"Stage {stage.__name__.replace('stage_', '')}.")
                stage(run, config)
    except (ZenscopeError, FileNotFoundError) as exc:
        print(f"zenscope {command}: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        LOGGER.debug(traceback.format_exc())
        print(f"zenscope {command}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_synth(config: PipelineConfig) -> int:
    return execute("synth", config, stage_synth)


def cmd_ingest(config: PipelineConfig) -> int:
    return execute("ingest", config, stage_ingest)


def cmd_degarch(config: PipelineConfig) -> int:
    return execute("degarch", config, stage_degarch)


def cmd_diagnose(config: PipelineConfig) -> int:
    return execute("diagnose", config, stage_diagnose)


def cmd_depmat(config: PipelineConfig) -> int:
    return execute("depmat", config, stage_depmat)


def cmd_fit_joint(config: PipelineConfig) -> int:
    return execute("fit-joint", config, stage_fit_joint)


def cmd_gof(config: PipelineConfig) -> int:
    return execute("gof", config, stage_gof)


def cmd_zenpath(config: PipelineConfig) -> int:
    return execute("zenpath", config, stage_zenpath)


def cmd_zenplot(config: PipelineConfig) -> int:
    return execute("zenplot", config, stage_zenplot)


def cmd_pipeline(config: PipelineConfig) -> int:
    """
    Every stage in order, starting from a synthetic market if no price file is given.
    """
    stages = [
        stage_ingest,
        stage_degarch,
        stage_diagnose,
        stage_depmat,
        stage_fit_joint,
        stage_gof,
        stage_zenpath,
        stage_zenplot,
    ]
    if config.prices is None:
        stages.insert(0, stage_synth)
    return execute("pipeline", config, *stages)

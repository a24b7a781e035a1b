"""
Command line interface.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from zenscope.cli.artifacts import SCHEMAS, schema_json
from zenscope.cli.commands import (
    cmd_degarch,
    cmd_depmat,
    cmd_diagnose,
    cmd_fit_joint,
    cmd_gof,
    cmd_ingest,
    cmd_pipeline,
    cmd_synth,
    cmd_zenpath,
    cmd_zenplot,
)
from zenscope.run.config import PipelineConfig
from zenscope.utils.commons import CLI_MEASURES, CLI_SOURCES, ZENSCOPE_VERSION
from zenscope.utils.exceptions import ConfigError
from zenscope.utils.logger import set_verbosity

COMMANDS = {
    "synth": cmd_synth,
    "ingest": cmd_ingest,
    "degarch": cmd_degarch,
    "diagnose": cmd_diagnose,
    "depmat": cmd_depmat,
    "fit-joint": cmd_fit_joint,
    "gof": cmd_gof,
    "zenpath": cmd_zenpath,
    "zenplot": cmd_zenplot,
    "pipeline": cmd_pipeline,
}


class _Parser(argparse.ArgumentParser):
    """
    Argument parser exiting with code 1 on usage errors.
    """

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


#############################
# Option groups
#############################


def _common() -> argparse.ArgumentParser:
    parser = _Parser(add_help=False)
    parser.add_argument("--seed", type=int, help="seed of every stochastic stage")
    parser.add_argument("--threads", type=int, help="number of workers")
    parser.add_argument("--out-dir", dest="out_dir", help="output directory (default zenscope-out)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("--quiet", action="store_true", help="warnings and errors only")
    return parser


def _add_synth(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", dest="synth_d", type=int, help="number of series")
    p.add_argument("--n-obs", dest="synth_n_obs", type=int, help="number of price rows")
    p.add_argument("--n-sectors", dest="synth_sectors", type=int, help="number of sectors")
    p.add_argument("--gap-frac", dest="synth_gap_frac", type=float, help="share of series with leading gaps")
    p.add_argument("--incomplete", dest="synth_incomplete", type=int, help="number of heavily incomplete series")


def _add_ingest(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prices", help="price CSV, date column then one column per ticker")
    p.add_argument("--max-missing", dest="max_missing", type=float, help="largest missing fraction kept")


def _add_sectors(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sectors", help="sector CSV with header ticker,sector,subsector")


def _add_margins(p: argparse.ArgumentParser) -> None:
    p.add_argument("--restarts", type=int, help="random restarts of the marginal optimizer")


def _add_diagnostics(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-lag", dest="max_lag", type=int, help="largest Ljung-Box lag")
    p.add_argument("--diag-panels", dest="diag_panels", type=int, help="series shown in diagnostic zenplots")
    p.add_argument("--nsim", type=int, help="simulated samples of the Q-Q envelopes")


def _add_measure(p: argparse.ArgumentParser) -> None:
    p.add_argument("--measure", choices=list(CLI_MEASURES), help="pairwise dependence measure")
    p.add_argument("--corner", type=float, help="corner size of lambda-emp")


def _add_gof(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threshold", dest="gof_threshold", type=float, help="p-value cutoff")
    p.add_argument(
        "--reverse-conditioning",
        dest="reverse_conditioning",
        action="store_true",
        default=None,
        help="condition the Rosenblatt transform on the second variate",
    )


def _add_zenpath(p: argparse.ArgumentParser) -> None:
    p.add_argument("--source", choices=list(CLI_SOURCES), help="matrix to rank, the measure by default")
    p.add_argument("--order", choices=["desc", "asc", "extremes", "chain", "all"], help="pair ordering")
    p.add_argument("--top", type=int, help="pairs from the top of the ordering, 0 for all")
    p.add_argument("--bottom", type=int, help="pairs from the bottom of the ordering (extremes)")
    p.add_argument(
        "--sector-mode",
        dest="sector_mode",
        choices=["any", "within", "cross", "per-sector"],
        help="sector filter",
    )


def _add_plot(p: argparse.ArgumentParser) -> None:
    p.add_argument("--width", type=int, help="maximal number of 2D columns")
    p.add_argument("--dirs", help="direction sequence made of u, d, l, r")
    p.add_argument("--style", help="JSON style override file")


def build_parser() -> argparse.ArgumentParser:
    """
    Parser of every subcommand.
    """
    parser = _Parser(prog="zenscope", description="Pairwise dependence analysis and zenplots.")
    parser.add_argument("--version", action="version", version=f"zenscope {ZENSCOPE_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = _common()

    def add(name: str, help_text: str, *groups) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        for group in groups:
            group(p)
        return p

    add("synth", "simulate a market with sector labels", _add_synth)
    add("ingest", "filter and fill prices, compute negative log-returns", _add_ingest, _add_sectors)
    add("degarch", "fit ARMA-GARCH margins, store residuals and pseudo-observations", _add_margins)
    add(
        "diagnose",
        "order residuals by Ljung-Box and Anderson-Darling, draw ACF and Q-Q zenplots",
        _add_diagnostics,
        _add_plot,
    )
    add("depmat", "pairwise dependence matrix", _add_measure, _add_sectors, _add_plot)
    add("fit-joint", "joint t copula and its tail dependence", _add_measure, _add_sectors, _add_plot)
    add("gof", "pairwise against joint goodness of fit", _add_gof)
    add("zenpath", "order pairs into a zenpath", _add_measure, _add_zenpath, _add_sectors)
    zenplot = add("zenplot", "render a zenplot", _add_plot, _add_diagnostics)
    zenplot.add_argument("--panel", choices=["scatter", "acf", "qq"], help="panel kind")
    zenplot.add_argument("--out", dest="plot_name", help="output filename inside the artifact folder")
    add(
        "pipeline",
        "every stage in order, on a synthetic market unless --prices is given",
        _add_synth,
        _add_ingest,
        _add_sectors,
        _add_margins,
        _add_diagnostics,
        _add_measure,
        _add_gof,
        _add_zenpath,
        _add_plot,
    )
    schema = sub.add_parser("schema", help="print the JSON schema of an artifact kind")
    schema.add_argument("--kind", choices=list(SCHEMAS), help="artifact kind, all kinds are listed if omitted")
    return parser


def config_from_args(args: argparse.Namespace) -> PipelineConfig:
    """
    Pipeline configuration from parsed arguments, unset options keep their defaults.

    Raises
    ------
    ConfigError
        If the configuration does not validate.
    """
    values = {k: v for k, v in vars(args).items() if k in PipelineConfig.__fields__ and v is not None}
    if "measure" in values:
        values["measure"] = CLI_MEASURES[values["measure"]]
    if "source" in values:
        values["source"] = CLI_SOURCES[values["source"]]
    try:
        return PipelineConfig(**values)
    except ValidationError as exc:
        raise ConfigError(f"Invalid configuration: {exc}") from exc


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the ``zenscope`` command.

    Returns
    -------
    int
        Exit code.
    """
    args = build_parser().parse_args(argv)
    if args.command == "schema":
        if args.kind is None:
            print("\n".join(SCHEMAS))
        else:
            print(schema_json(args.kind))
        return 0
    set_verbosity(args.verbose, args.quiet)
    try:
        config = config_from_args(args)
    except ConfigError as exc:
        print(f"zenscope {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return COMMANDS[args.command](config)


if __name__ == "__main__":
    sys.exit(main())

"""The ``kbal`` command line: estimate | simulate | diagnose | weights.

Exit codes are 0 on success, 2 for data problems (schema or domain errors),
3 for numerical failures and 4 for invalid options."""

import argparse
import sys
import warnings
from pathlib import Path
from typing import List, Optional

import kbal.hpc.global_variables
import numpy as np
import pandas as pd
from kbal.cli.io import load_csv, read_weights, T_RULES, write_reports, write_weights
from kbal.cli.options import warning_text
from kbal.cli.run_config import RunConfig
from kbal.cli.tables import estimate_table, imbalance_table, spectrum_summary
from kbal.core.diagnostics import compare_imbalance, GramBlock, spectrum
from kbal.core.errors import ConfigurationError, DomainError, KbalError, NumericalError
from kbal.core.estimators import EstimatorRoster, minimax_weights
from kbal.core.kernels import gram_blocks
from kbal.hpc.main import Campaign, run_campaign

EXIT_OK = 0
EXIT_DATA = 2
EXIT_NUMERICAL = 3
EXIT_CONFIG = 4


def exit_code(error: Exception) -> int:
    if isinstance(error, ConfigurationError):
        return EXIT_CONFIG
    if isinstance(error, NumericalError):
        return EXIT_NUMERICAL
    if isinstance(error, DomainError):
        return EXIT_DATA
    return 1


def _add_switch(parser: argparse.ArgumentParser, name: str, help: str):
    """--name and --no-name, leaving the setting at None when neither is given."""
    dest = name.replace("-", "_")
    group = parser.add_mutually_exclusive_group()
    group.add_argument(f"--{name}", dest=dest, action="store_true", default=None, help=help)
    group.add_argument(f"--no-{name}", dest=dest, action="store_false", default=None)


def _add_run_config_flags(parser: argparse.ArgumentParser):
    """Flags mirroring the RunConfig fields. They default to None so that only flags given
    on the command line override the config file."""
    parser.add_argument("data", type=Path, help="CSV file with a header row")
    parser.add_argument("--config", type=Path, help="YAML file with RunConfig settings")
    parser.add_argument("--kernel", help="matern, linear or gaussian")
    parser.add_argument("--nu", type=float, help="Matern smoothness: 0.5, 1.5 or 2.5")
    parser.add_argument("--lengthscale", type=float)
    _add_switch(parser, "standardize", "standardize covariates")
    parser.add_argument("--sigma", type=float, help="penalty sigma of the minimax linear weights")
    parser.add_argument("--level", type=float, help="confidence level")
    _add_switch(parser, "scaled", "estimate the target mean psi^c")
    parser.add_argument("--estimators", help="comma separated, e.g. ml,mlt,ols,ipw,aipw")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", help="CSV output path")
    parser.add_argument("--w-col", default="w", help="column holding W, 0 marks units with observed outcomes")
    parser.add_argument("--y-col", default="y")
    parser.add_argument("--t-col", default=None, help="column holding the target indicator T")
    parser.add_argument("--t-rule", default="all", choices=T_RULES, help="T when there is no T column")


class ArgumentParser(argparse.ArgumentParser):
    """Reports invalid flags with the exit code of invalid options."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="kbal", description="Minimax linear (kernel balancing) estimation.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    estimate = subparsers.add_parser("estimate", help="estimate the target mean with several estimators")
    _add_run_config_flags(estimate)

    diagnose = subparsers.add_parser("diagnose", help="Gram spectra and weight imbalance")
    _add_run_config_flags(diagnose)
    diagnose.add_argument("--weights", type=Path, nargs="*", default=[], help="weight files to compare")

    weights = subparsers.add_parser("weights", help="write the minimax linear weights of the W=0 units")
    _add_run_config_flags(weights)

    simulate = subparsers.add_parser("simulate", help="run a simulation campaign")
    simulate.add_argument("campaign", type=Path, help="YAML campaign file")
    simulate.add_argument("--reps", type=int, help="override the number of replications")
    simulate.add_argument("--seed", type=int, help="override the base seed")
    simulate.add_argument("--out", help="override the CSV output path")

    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the `estimate` section of the kbal config file, then --config, then flags."""
    config = RunConfig().updated(**kbal.hpc.global_variables.ESTIMATE_DEFAULTS)
    if args.config is not None:
        config = config.updated(**RunConfig.read_settings(args.config))
    names = ("kernel", "nu", "lengthscale", "standardize", "sigma", "level", "scaled", "estimators", "seed", "out")
    flags = {name: getattr(args, name) for name in names}
    return config.updated(**flags).validate()


def cmd_estimate(config: RunConfig, data) -> int:
    roster = EstimatorRoster(config.estimator_names, config.kernel_spec, config.sigma, config.scaled, config.level)
    reports = roster.run(data)
    if config.out:
        write_reports(reports, config.out)
    print(estimate_table(reports))
    return EXIT_OK


def cmd_weights(config: RunConfig, data) -> int:
    weights = minimax_weights(data, config.kernel_spec, config.sigma)
    if config.out:
        write_weights(data, weights.gamma, config.out)
    else:
        print(pd.DataFrame({"weight": weights.gamma}, index=data.treated.nonzero()[0]).to_csv(index_label="row"))
    return EXIT_OK


def spectrum_frame(report) -> pd.DataFrame:
    j = np.arange(1, len(report.eigenvalues) + 1)
    return pd.DataFrame({"block": str(report.which), "j": j, "eigenvalue": report.eigenvalues})


def cmd_diagnose(config: RunConfig, data, weight_files: List[Path]) -> int:
    blocks = gram_blocks(data, config.kernel_spec)
    reports = [spectrum(blocks, which) for which in GramBlock]
    for report in reports:
        print(spectrum_summary(report))

    weight_sets = {"zeros": [0.0] * data.n_z, "ones": [1.0] * data.n_z}
    for path in weight_files:
        weight_sets[Path(path).stem] = read_weights(path)
    table = compare_imbalance(data, config.kernel_spec, weight_sets, config.sigma)
    print(imbalance_table(table))

    if config.out:
        out = Path(config.out)
        table.to_csv(out, index=False, lineterminator="\n")
        spectra = pd.concat([spectrum_frame(r) for r in reports])
        spectra.to_csv(out.with_name(f"{out.stem}_spectrum.csv"), index=False, lineterminator="\n")
    return EXIT_OK


def cmd_simulate(
    campaign_path: Path, reps: Optional[int] = None, seed: Optional[int] = None, out: Optional[str] = None
) -> int:
    campaign = Campaign.from_yaml(campaign_path)
    if reps is not None:
        if reps < 1:
            raise ConfigurationError(f"--reps: must be at least 1, got {reps}.")
        campaign.reps = reps
    if seed is not None:
        campaign.base_seed = seed
    if out is not None:
        campaign.output = Path(out)
    summaries = run_campaign(campaign)
    print(f"Wrote {len(summaries)} rows to {campaign.output}")
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """Runs the command line and returns its exit code."""
    args = build_parser().parse_args(argv)
    logger = kbal.hpc.global_variables.LOGGER
    logger.info(f"kbal {' '.join(argv if argv is not None else sys.argv[1:])}")

    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            if args.command == "simulate":
                code = cmd_simulate(args.campaign, args.reps, args.seed, args.out)
            else:
                config = run_config_from_args(args)
                data = load_csv(args.data, args.w_col, args.y_col, args.t_col, args.t_rule)
                if args.command == "estimate":
                    code = cmd_estimate(config, data)
                elif args.command == "weights":
                    code = cmd_weights(config, data)
                else:
                    code = cmd_diagnose(config, data, args.weights)
        for message in dict.fromkeys(str(w.message) for w in caught):
            logger.warning(message)
            print(warning_text(message), file=sys.stderr)
        return code
    except KbalError as e:
        code = exit_code(e)
        logger.error(f"{type(e).__name__}: {e}")
        print(warning_text(f"{type(e).__name__}: {e}"), file=sys.stderr)
        return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import kbal.hpc.global_variables
import yaml
from kbal.core.errors import ConfigurationError, KbalError
from kbal.core.estimators import DEFAULT_ESTIMATORS, DEFAULT_SIGMA, EstimatorName, parse_estimators
from kbal.core.kernels import KernelSpec
from kbal.core.simbench import (
    DgpFamily,
    DgpSpec,
    OutcomeDesign,
    run_replications,
    SimulationSummary,
    write_csv,
    write_excel,
    write_markdown,
)

CAMPAIGN_KEYS = {
    "family",
    "n",
    "sigma_eps",
    "eta",
    "designs",
    "estimators",
    "reps",
    "base_seed",
    "sigma",
    "kernel",
    "level",
    "output",
    "markdown",
    "xlsx",
}


def _as_list(value) -> list:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def kernel_spec_from_config(value: Union[None, str, Dict[str, Any], KernelSpec]) -> KernelSpec:
    """A kernel given either by its family name or by a mapping of KernelSpec fields."""
    if value is None:
        return KernelSpec()
    if isinstance(value, KernelSpec):
        return value
    if isinstance(value, str):
        return KernelSpec(family=value)
    if isinstance(value, dict):
        try:
            return KernelSpec(**value)
        except TypeError as e:
            raise ConfigurationError(f"Invalid kernel settings {value}: {e}") from None
    raise ConfigurationError(f"Invalid kernel settings {value!r}.")


@dataclass
class Campaign:
    """A grid of simulation cells, every combination of sample size, outcome noise and,
    for the Hainmueller family, selection scale and outcome design.

    Every cell uses the same replication seeds (base_seed, r), r = 0..reps-1.
    """

    family: DgpFamily
    n: List[int]
    sigma_eps: List[float]
    eta: List[float] = field(default_factory=lambda: [math.sqrt(30.0)])
    designs: List[OutcomeDesign] = field(default_factory=lambda: [OutcomeDesign.D1])
    estimators: List[EstimatorName] = field(default_factory=lambda: list(DEFAULT_ESTIMATORS))
    reps: int = 1000
    base_seed: int = 0
    sigma: float = DEFAULT_SIGMA
    kernel: KernelSpec = field(default_factory=KernelSpec)
    level: float = 0.95
    output: Path = Path("simulation.csv")
    markdown: Optional[Path] = None
    xlsx: Optional[Path] = None

    def __post_init__(self):
        self.family = DgpFamily(self.family)
        self.n = [int(n) for n in _as_list(self.n)]
        self.sigma_eps = [float(s) for s in _as_list(self.sigma_eps)]
        self.eta = [float(e) for e in _as_list(self.eta)]
        self.designs = [OutcomeDesign(d) for d in _as_list(self.designs)]
        self.estimators = parse_estimators(self.estimators)
        self.kernel = kernel_spec_from_config(self.kernel)
        self.output = Path(self.output)
        self.markdown = Path(self.markdown) if self.markdown else None
        self.xlsx = Path(self.xlsx) if self.xlsx else None

        if self.reps < 1:
            raise ConfigurationError(f"reps must be at least 1, got {self.reps}.")
        if not self.sigma > 0.0:
            raise ConfigurationError(f"sigma must be positive, got {self.sigma}.")
        if not self.n:
            raise ConfigurationError("The campaign names no sample sizes.")

    @classmethod
    def from_dict(cls, settings: dict) -> "Campaign":
        unknown = set(settings) - CAMPAIGN_KEYS
        if unknown:
            raise ConfigurationError(f"Unknown campaign keys: {', '.join(sorted(unknown))}.")
        for key in ("family", "n", "sigma_eps"):
            if key not in settings:
                raise ConfigurationError(f"Campaign is missing the '{key}' key.")
        return cls(**settings)

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "Campaign":
        path = Path(path)
        if not path.exists():
            raise ConfigurationError(f"Campaign file '{path}' does not exist.")
        with open(path, "r") as f:
            settings = yaml.safe_load(f)
        if not isinstance(settings, dict):
            raise ConfigurationError(f"Campaign file '{path}' must contain a mapping.")
        return cls.from_dict(settings)

    def cells(self) -> List[DgpSpec]:
        """Simulation cells in table order: sample size varies fastest."""
        if self.family == DgpFamily.Hainmueller:
            grid = itertools.product(self.designs, self.eta, self.sigma_eps, self.n)
            return [
                DgpSpec(self.family, n, sigma_eps, eta, design, seed=self.base_seed)
                for design, eta, sigma_eps, n in grid
            ]
        return [
            DgpSpec(self.family, n, sigma_eps, seed=self.base_seed)
            for sigma_eps, n in itertools.product(self.sigma_eps, self.n)
        ]


def run_campaign(campaign: Campaign, threads: Optional[int] = None) -> List[SimulationSummary]:
    """Runs every cell of a campaign and writes the CSV table, plus the markdown and Excel
    versions when the campaign names them. A cell that fails is logged and skipped.

    :param threads: threads used for the replications of a cell, by default KB_THREADS
        or the config file setting
    :return: one summary per cell and estimator
    """
    logger = kbal.hpc.global_variables.LOGGER
    threads = kbal.hpc.global_variables.get_threads() if threads is None else threads
    cells = campaign.cells()
    logger.info(f"Running campaign with {len(cells)} cells, {campaign.reps} replications, {threads} threads.")

    summaries = []
    for cell in cells:
        logger.info(f"Starting cell {cell.label()}.")
        try:
            cell_summaries = run_replications(
                cell,
                campaign.estimators,
                campaign.reps,
                base_seed=campaign.base_seed,
                spec=campaign.kernel,
                sigma=campaign.sigma,
                level=campaign.level,
                threads=threads,
            )
        except KbalError as e:
            logger.error(f"Cell {cell.label()} failed: {e}")
            continue

        for summary in cell_summaries:
            for error in summary.errors:
                logger.warning(f"{cell.label()}, {summary.estimator} failed in {error}")
        logger.info(f"Finished cell {cell.label()}.")
        summaries.extend(cell_summaries)

    write_csv(summaries, campaign.output)
    logger.info(f"Wrote {len(summaries)} rows to {campaign.output}.")
    if campaign.markdown:
        write_markdown(summaries, campaign.markdown)
    if campaign.xlsx:
        write_excel(summaries, campaign.xlsx)

    return summaries

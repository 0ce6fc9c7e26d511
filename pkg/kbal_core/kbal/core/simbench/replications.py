import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np
from kbal.core.errors import ConfigurationError, KbalError
from kbal.core.estimators import EstimatorName, EstimatorRoster
from kbal.core.estimators.minimax import DEFAULT_SIGMA
from kbal.core.kernels import KernelSpec
from kbal.core.simbench.dgp import DgpSpec, generate, replication_rng
from kbal.core.simbench.truth import cell_truth

# point estimate, half-width, whether the interval covers the truth, largest weight;
# or the error message of a failed replication
Outcome = Union[Tuple[float, float, bool, float], str]


@dataclass
class SimulationSummary:
    """Monte Carlo performance of one estimator in one simulation cell."""

    family: str
    n: int
    sigma_eps: float
    eta: Optional[float]
    design: Optional[str]
    estimator: str
    replications: int
    failures: int
    rmse: float
    bias: float
    mean_half_width: float
    coverage: float
    truth: float
    median_max_weight: float = math.nan
    errors: List[str] = field(default_factory=list, repr=False)

    @property
    def cell(self) -> tuple:
        return self.family, self.n, self.sigma_eps, self.eta, self.design, self.estimator

    def as_dict(self) -> dict:
        row = asdict(self)
        del row["errors"]
        return row


def summarize(points: np.ndarray, half_widths: np.ndarray, covered: np.ndarray, truth: float) -> Dict[str, float]:
    """rmse, bias, mean half-width and coverage of the successful replications.
    All four are NaN when there are none."""
    if len(points) == 0:
        return {"rmse": math.nan, "bias": math.nan, "mean_half_width": math.nan, "coverage": math.nan}
    errors = points - truth
    return {
        "rmse": float(np.sqrt(np.mean(errors**2))),
        "bias": float(np.mean(errors)),
        "mean_half_width": float(np.mean(half_widths)),
        "coverage": float(np.mean(covered)),
    }


class ReplicationRunner:
    """Runs every estimator of a roster on replications of one simulation cell.

    Replication r draws its data from a generator seeded by (base_seed, r), so the outcome of a
    replication does not depend on which thread runs it or when.
    """

    def __init__(self, dgp: DgpSpec, roster: EstimatorRoster, base_seed: int, truth: float):
        self.dgp = dgp
        self.roster = roster
        self.base_seed = base_seed
        self.truth = truth

    def __call__(self, replication: int) -> Dict[EstimatorName, Outcome]:
        data = generate(self.dgp, replication_rng(self.base_seed, replication))
        outcomes = {}
        cache = {}
        for estimator in self.roster.estimators:
            try:
                report = self.roster.estimate(data, estimator, cache)
            except (KbalError, np.linalg.LinAlgError) as e:
                outcomes[estimator] = f"replication {replication}: {e}"
                continue
            outcomes[estimator] = (
                report.point,
                report.half_width,
                report.covers(self.truth),
                float(report.metadata.get("max_weight", math.nan)),
            )
        return outcomes


def run_replications(
    dgp: DgpSpec,
    estimators: Iterable[Union[str, EstimatorName]],
    reps: int,
    base_seed: int = 0,
    spec: KernelSpec = KernelSpec(),
    sigma: float = DEFAULT_SIGMA,
    level: float = 0.95,
    scaled: bool = True,
    threads: int = 1,
    truth: Optional[float] = None,
) -> List[SimulationSummary]:
    """Estimates rmse, bias, confidence interval half-width and coverage of each estimator
    over `reps` replications of `dgp`.

    A replication in which an estimator raises is counted as a failure of that estimator and left
    out of its summary. Warnings, such as a propensity model that does not converge, are not failures.

    :param threads: number of replications run at the same time, results do not depend on it
    :param truth: value of the estimand, by default the closed form or a Monte Carlo estimate
    """
    if reps < 1:
        raise ConfigurationError(f"Number of replications must be at least 1, got {reps}.")

    roster = EstimatorRoster(estimators, spec, sigma, scaled, level)
    truth = cell_truth(dgp) if truth is None else truth
    runner = ReplicationRunner(dgp, roster, base_seed, truth)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                # map returns results in replication order
                results = list(executor.map(runner, range(reps)))
        else:
            results = [runner(r) for r in range(reps)]

    summaries = []
    for estimator in roster.estimators:
        outcomes = [result[estimator] for result in results if not isinstance(result[estimator], str)]
        errors = [result[estimator] for result in results if isinstance(result[estimator], str)]
        points = np.array([o[0] for o in outcomes])
        half_widths = np.array([o[1] for o in outcomes])
        covered = np.array([o[2] for o in outcomes])
        max_weights = np.array([o[3] for o in outcomes])

        summaries.append(
            SimulationSummary(
                family=str(dgp.family),
                n=dgp.n,
                sigma_eps=dgp.sigma_eps,
                eta=dgp.eta if dgp.design is not None else None,
                design=str(dgp.design) if dgp.design is not None else None,
                estimator=str(estimator),
                replications=len(outcomes),
                failures=len(errors),
                truth=truth,
                median_max_weight=float(np.median(max_weights)) if len(max_weights) else math.nan,
                errors=errors,
                **summarize(points, half_widths, covered, truth),
            )
        )
    return summaries

import math
from typing import Optional, Tuple

import numpy as np
from kbal.core.simbench.dgp import DgpFamily, DgpSpec, generate, OutcomeDesign

MONTE_CARLO_DRAWS = 10**6


def closed_form_truth(dgp: DgpSpec) -> Optional[float]:
    """Population mean of m(X, 0) over the target population, when it is known analytically."""
    if dgp.family == DgpFamily.KangSchafer:
        return 210.0
    if dgp.family == DgpFamily.Uniform:
        return 0.5 + 1.0 / 3.0
    if dgp.family == DgpFamily.Hainmueller:
        if dgp.outcome_design == OutcomeDesign.D1:
            # E X5 + E X6
            return 1.5
        if dgp.outcome_design == OutcomeDesign.D2:
            # E X3 X4 = 0 and E sqrt(X5) = sqrt(2 / pi)
            return -math.sqrt(2.0 / math.pi)
        # Var(X1 + X2) + Var(X5) + (E X5)^2
        return 8.0
    return None


def monte_carlo_truth(dgp: DgpSpec, draws: int = MONTE_CARLO_DRAWS, seed: Optional[int] = None) -> Tuple[float, float]:
    """Mean of the noise free regression over the target units of one large draw,
    with its Monte Carlo standard error."""
    spec = dgp.with_n(draws)
    rng = np.random.default_rng(dgp.seed if seed is None else seed)
    data = generate(spec, rng)
    values = data.regression[data.target]
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(len(values)))


def cell_truth(dgp: DgpSpec, draws: int = MONTE_CARLO_DRAWS) -> float:
    """Closed form truth where available, otherwise a Monte Carlo estimate."""
    truth = closed_form_truth(dgp)
    if truth is None:
        truth, _ = monte_carlo_truth(dgp, draws)
    return truth

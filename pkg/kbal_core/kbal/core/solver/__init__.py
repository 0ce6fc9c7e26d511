from kbal.core.solver.duality import check_duality, DualityCheck
from kbal.core.solver.ridge import ridge_fit, RidgeFit
from kbal.core.solver.weights import balance_norm, BalanceWeights, objective_value, solve_weights

__all__ = [
    "BalanceWeights",
    "balance_norm",
    "objective_value",
    "solve_weights",
    "RidgeFit",
    "ridge_fit",
    "DualityCheck",
    "check_duality",
]

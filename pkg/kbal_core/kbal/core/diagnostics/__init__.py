from kbal.core.diagnostics.imbalance import compare_imbalance, default_weight_sets
from kbal.core.diagnostics.riesz import riesz_error, riesz_recovery
from kbal.core.diagnostics.spectrum import decay_exponent, GramBlock, spectrum, SpectrumReport

__all__ = [
    "GramBlock",
    "SpectrumReport",
    "spectrum",
    "decay_exponent",
    "riesz_error",
    "riesz_recovery",
    "compare_imbalance",
    "default_weight_sets",
]

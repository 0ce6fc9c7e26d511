from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import List, Optional, Union

import yaml
from kbal.cli.options import Options
from kbal.core.errors import ConfigurationError
from kbal.core.estimators import DEFAULT_ESTIMATORS, DEFAULT_SIGMA, EstimatorName, parse_estimators
from kbal.core.kernels import KernelFamily, KernelSpec
from kbal.core.kernels.matern import SUPPORTED_NU


@dataclass
class RunConfig(Options):
    """Settings of the estimate, diagnose and weights subcommands. Field names are the long
    command line flags (with dashes replaced by underscores), so a YAML file with these keys
    can hold any combination of flags."""

    estimators: List[str] = field(default_factory=lambda: [str(e) for e in DEFAULT_ESTIMATORS])
    kernel: str = str(KernelFamily.Matern)
    nu: float = 1.5
    lengthscale: float = 1.0
    standardize: bool = True
    sigma: float = DEFAULT_SIGMA
    level: float = 0.95
    scaled: bool = True
    seed: int = 0
    out: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.estimators, str):
            self.estimators = [e.strip() for e in self.estimators.split(",") if e.strip()]
        else:
            self.estimators = [str(e) for e in self.estimators]
        self.kernel = str(self.kernel).strip().lower()

    def check_estimators(self) -> Optional[str]:
        if not self.estimators:
            return "--estimators: at least one estimator is needed."
        unknown = [e for e in self.estimators if e.lower() not in EstimatorName.values]
        if unknown:
            choices = ", ".join(EstimatorName.values)
            return f"--estimators: unknown estimator(s) {', '.join(unknown)}, choose from {choices}."

    def check_kernel(self) -> Optional[str]:
        if self.kernel not in KernelFamily.values:
            return f"--kernel: unknown kernel '{self.kernel}', choose from {', '.join(KernelFamily.values)}."

    def check_nu(self) -> Optional[str]:
        if self.kernel == str(KernelFamily.Matern) and not any(abs(self.nu - nu) < 1e-12 for nu in SUPPORTED_NU):
            return f"--nu: Matern smoothness must be one of {', '.join(map(str, SUPPORTED_NU))}, got {self.nu}."

    def check_lengthscale(self) -> Optional[str]:
        if not self.lengthscale > 0:
            return f"--lengthscale: must be positive, got {self.lengthscale}."

    def check_sigma(self) -> Optional[str]:
        if not self.sigma > 0:
            return f"--sigma: must be positive, got {self.sigma}."

    def check_level(self) -> Optional[str]:
        if not 0 < self.level < 1:
            return f"--level: must be in (0, 1), got {self.level}."

    def validate(self) -> "RunConfig":
        """:raises ConfigurationError: naming the offending flag(s)"""
        messages = self.run_check_functions()
        if messages:
            raise ConfigurationError(" ".join(messages))
        return self

    @property
    def kernel_spec(self) -> KernelSpec:
        return KernelSpec(family=self.kernel, nu=self.nu, lengthscale=self.lengthscale, standardize=self.standardize)

    @property
    def estimator_names(self) -> List[EstimatorName]:
        return parse_estimators(self.estimators)

    def updated(self, **settings) -> "RunConfig":
        """Copy with the given settings replaced, settings that are None are ignored."""
        unknown = set(settings) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigurationError(f"Unknown setting(s): {', '.join(sorted(unknown))}.")
        values = asdict(self)
        values.update({k: v for k, v in settings.items() if v is not None})
        return RunConfig(**values)

    def to_yaml(self, path: Union[str, Path]):
        with open(path, "w") as f:
            yaml.safe_dump(asdict(self), f, sort_keys=False)

    @staticmethod
    def read_settings(path: Union[str, Path]) -> dict:
        """The settings held by a RunConfig YAML file, keyed by field name."""
        path = Path(path)
        if not path.exists():
            raise ConfigurationError(f"--config: file '{path}' does not exist.")
        with open(path, "r") as f:
            settings = yaml.safe_load(f) or {}
        if not isinstance(settings, dict):
            raise ConfigurationError(f"--config: '{path}' must contain a mapping of flag names to values.")
        return {str(k).replace("-", "_"): v for k, v in settings.items()}

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "RunConfig":
        return cls().updated(**cls.read_settings(path))

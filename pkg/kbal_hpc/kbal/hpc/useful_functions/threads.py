import os
from typing import Mapping, Optional

from kbal.core.errors import ConfigurationError

THREADS_ENV_VAR = "KB_THREADS"


def resolve_threads(
    kbal_config: Optional[dict], machine: Optional[str], environ: Mapping[str, str] = os.environ
) -> int:
    """Number of threads used for simulation campaigns. The ``KB_THREADS`` environment variable
    wins over the ``threads`` setting of the current machine, then of the ``default`` section
    of the config file. Falls back to 1.

    :raises ConfigurationError: if KB_THREADS is set to something that is not a positive integer
    """
    value = environ.get(THREADS_ENV_VAR)
    if value is not None and value.strip():
        try:
            threads = int(value)
        except ValueError:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be a positive integer, got '{value}'.") from None
        if threads < 1:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be a positive integer, got '{value}'.")
        return threads

    kbal_config = kbal_config or {}
    for section in (machine, "default"):
        if section and isinstance(kbal_config.get(section), dict):
            threads = kbal_config[section].get("threads")
            if threads is not None:
                return max(1, int(threads))
    return 1

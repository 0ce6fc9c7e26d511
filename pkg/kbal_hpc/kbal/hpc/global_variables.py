import os
import platform
from pathlib import Path
from typing import Optional

import yaml
from kbal.core.errors import ConfigurationError
from kbal.hpc.log import setup_logger
from kbal.hpc.useful_functions import init_machine, resolve_threads


def get_param_from_config(kbal_config: Optional[dict], *keys, default=None):
    """Given a config and keys, walks down the nested mappings one key at a time

    :param kbal_config: kbal read in config
    :param keys: positional arguments which to pass to the config
    :param default: returned when any of the keys is missing
    """
    if not kbal_config:
        return default

    next_param = kbal_config
    for k in keys:
        if not isinstance(next_param, dict):
            return default
        next_param = next_param.get(k)
        # if key is not there, get() will return None by default
        if next_param is None:
            return default

    return next_param


def initialize_config(config_path: Path) -> dict:
    """Reads the kbal config file. A missing file gives an empty config."""
    config_path = Path(config_path)
    if not config_path.exists():
        return {}

    with open(config_path, "r") as s:
        kbal_config = yaml.safe_load(s) or {}

    if not isinstance(kbal_config, dict):
        raise ConfigurationError(f"'{config_path}' must contain a mapping of machine names to settings.")
    return kbal_config


def machine_settings(kbal_config: dict, machine: Optional[str], *keys, default=None):
    """Looks a setting up for the current machine first, then in the `default` section."""
    if machine:
        value = get_param_from_config(kbal_config, machine, *keys)
        if value is not None:
            return value
    return get_param_from_config(kbal_config, "default", *keys, default=default)


KBAL_CONFIG_PATH: Path = Path(os.environ.get("KBAL_CONFIG", Path.home() / "kbal_config.yaml"))

KBAL_CONFIG: dict = initialize_config(KBAL_CONFIG_PATH)

# the MACHINE will be a key from the top layer of the config file
# if it not found, it will be None and the `default` section is used
MACHINE: Optional[str] = init_machine(platform.node(), KBAL_CONFIG)

# default settings of the estimate, diagnose and weights subcommands
ESTIMATE_DEFAULTS: dict = machine_settings(KBAL_CONFIG, MACHINE, "estimate", default={})

# set up loggers
LOG_FILE = str(Path(machine_settings(KBAL_CONFIG, MACHINE, "log_file", default="kbal.log")).expanduser())
LOGGER = setup_logger("KBAL", LOG_FILE)


def get_threads() -> int:
    """Threads for simulation campaigns, resolved when a campaign starts so that
    ``KB_THREADS`` can be set after import."""
    return resolve_threads(KBAL_CONFIG, MACHINE)

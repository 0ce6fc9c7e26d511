from kbal.hpc.useful_functions.get_machine import init_machine
from kbal.hpc.useful_functions.threads import resolve_threads

__all__ = ["init_machine", "resolve_threads"]

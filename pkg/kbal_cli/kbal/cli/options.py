import os
from dataclasses import dataclass
from typing import List

try:
    from termcolor import colored

    TERMCOLOR_IMPORTED = True
except ImportError:
    TERMCOLOR_IMPORTED = False

# do this on Windows to get the color working
if os.name == "nt":
    os.system("color")


def warning_text(s: str) -> str:
    """Marks a warning so that it stands out in the terminal."""
    if TERMCOLOR_IMPORTED:
        return colored(f"! {s}", "red")
    return f"! {s}"


def highlight(s: str) -> str:
    if TERMCOLOR_IMPORTED:
        return colored(s, "green")
    return s


@dataclass
class Options:
    """Base class for a set of command line options. Subclasses implement methods starting with
    ``check`` that return a message when a value is not acceptable and None otherwise."""

    def run_check_functions(self) -> List[str]:
        """Runs all methods that start with `check` and collects the messages they return."""
        messages = []

        for attr_name in sorted(dir(self)):
            if not attr_name.startswith("check"):
                continue
            attr = getattr(self, attr_name)
            if callable(attr):
                res = attr()
                # a non empty string means the check failed
                if res:
                    messages.append(res)

        return messages

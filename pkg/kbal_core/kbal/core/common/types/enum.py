from enum import Enum
from typing import Any, List

from kbal.core.common.functools import classproperty


class Enum(Enum):
    """Extension of the builtin Enum class. Lookups by value are case insensitive for strings,
    which is what the command line and the configuration files rely on."""

    @classproperty
    def names(cls) -> List[str]:
        return [e.name for e in cls]

    @classproperty
    def values(cls) -> List[Any]:
        return [e.value for e in cls]

    @classmethod
    def from_name(cls, name: str):
        return cls.__members__[name]

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for item in cls:
                if isinstance(item.value, str) and item.value.lower() == value.strip().lower():
                    return item
        return super()._missing_(value)

    def __str__(self) -> str:
        return str(self.value)

from kbal.core.common.types.enum import Enum

__all__ = ["Enum"]

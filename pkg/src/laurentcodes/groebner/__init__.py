"""Gröbner bases over polynomial rings and the Laurent reduction layer."""

from .engine import *  # noqa: F401,F403
from .engine import __all__ as _engine_all
from .laurent import *  # noqa: F401,F403
from .laurent import __all__ as _laurent_all

__all__ = list(_engine_all) + list(_laurent_all)

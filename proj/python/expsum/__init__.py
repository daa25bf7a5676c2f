"""Extremal constants and inequality checks for exponential sums."""

from ._expsum import *  # noqa: F401,F403
from ._expsum import __doc__  # noqa: F401

__version__ = "0.1.0"

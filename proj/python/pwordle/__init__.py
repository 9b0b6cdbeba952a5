"""Permutation wordle: play games, compute generating functions, scan strategies."""

from ._core import *  # noqa: F401,F403
from ._core import closedform, PwordleError, ScanRefused  # noqa: F401

__version__ = "0.1.0"

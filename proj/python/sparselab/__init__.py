"""Sparsification, reductions and exact oracles for graph optimization problems."""

from ._sparselab import *  # noqa: F401,F403
from ._sparselab import __doc__  # noqa: F401

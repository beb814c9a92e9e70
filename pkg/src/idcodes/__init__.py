"""Identification problems on graphs.

Identifying codes, (open) locating-dominating sets and resolving sets, with
exact oracle solvers, a linear cotree algorithm for cographs, geometric model
builders, extremal family generators, and a closed-form bounds checker.
"""

from .graph import Graph
from .models import IntervalModel, PermutationModel
from .verify import ProblemKind

__all__ = ["Graph", "IntervalModel", "PermutationModel", "ProblemKind"]
__version__ = "0.1.0"

"""Permutation-group computations and checkable certificates for realizing
inertia groups of covers of the affine line in characteristic p."""
from .perm import PermGroup, Permutation, parse_cycles

__version__ = "0.1.0"
__all__ = ["Permutation", "PermGroup", "parse_cycles", "__version__"]

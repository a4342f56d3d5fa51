"""Plethysm coefficients through lattice points in polytopes."""
from ._kernels import BACKEND

__version__ = "0.1.0"

"""
@package quiverpy.math
@date 2026-10-16
"""
from . import linalg
from . import lattice

from .Field import Field
from .MultiPoly import MultiPoly, matrix_variables


__all__ = ["linalg", "lattice", "Field", "MultiPoly", "matrix_variables"]

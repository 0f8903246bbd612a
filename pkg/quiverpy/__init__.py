"""
@package quiverpy
@date 2026-10-16
"""
from . import math
from . import quiver
from . import rep
from . import reptype
from . import atlas
from . import moment
from . import verify

from .exceptions import QuiverPyError, QuiverError, FormatError, RepresentationError, RelationViolation, \
  DecompositionError, BudgetExceeded, AtlasError, PolynomialError


__all__ = ["math", "quiver", "rep", "reptype", "atlas", "moment", "verify", "QuiverPyError", "QuiverError",
           "FormatError", "RepresentationError", "RelationViolation", "DecompositionError", "BudgetExceeded",
           "AtlasError", "PolynomialError"]

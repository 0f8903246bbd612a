"""
@package quiverpy.rep
@date 2026-10-16
"""
from . import hom
from . import decompose
from . import strings
from . import io

from .Rep import Rep, ValidationReport
from .StringSpec import StringSpec
from .hom import hom_space, hom_dim, end_algebra, is_isomorphic
from .decompose import Indecomposability, Decomposition, indecomposability, is_indecomposable
from .strings import string_module, all_string_specs, classify_AA, weight_chain_rep


__all__ = ["hom", "decompose", "strings", "io", "Rep", "ValidationReport", "StringSpec", "hom_space", "hom_dim",
           "end_algebra", "is_isomorphic", "Indecomposability", "Decomposition", "indecomposability",
           "is_indecomposable", "string_module", "all_string_specs", "classify_AA", "weight_chain_rep"]

"""
@package quiverpy.reptype
@date 2026-10-16
"""
from . import census

from .TitsForm import TitsForm, tits_form
from .CensusReport import CensusReport
from .census import census_all, finite_type_check


__all__ = ["census", "TitsForm", "tits_form", "CensusReport", "census_all", "finite_type_check"]

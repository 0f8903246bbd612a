"""
@package quiverpy.atlas
@date 2026-10-16
"""
from .CaseId import CaseId, CaseTemplate, FAMILIES
from .CaseRecord import CaseRecord, Orbit, SemiInvariant
from .families import list_cases, get_case, sp_gl_labels, sp_gl_codim
from .queries import CharacteristicCycle, orbit_codim, fourier_permutation, pyasetskii, characteristic_cycle, \
  projective_cover_dims
from .verify import InvariantCheck, InvariantReport, verify_case_invariants, verify_atlas_grid, grid_cases


__all__ = ["CaseId", "CaseTemplate", "FAMILIES", "CaseRecord", "Orbit", "SemiInvariant", "list_cases", "get_case",
           "sp_gl_labels", "sp_gl_codim", "CharacteristicCycle", "orbit_codim", "fourier_permutation", "pyasetskii",
           "characteristic_cycle", "projective_cover_dims", "InvariantCheck", "InvariantReport",
           "verify_case_invariants", "verify_atlas_grid", "grid_cases"]

"""
@package quiverpy.moment
@date 2026-10-16
"""
from .LinearAction import LinearAction, standard_symplectic_form, block_symplectic_form
from .MomentSystem import MomentSystem
from .lemma_m2 import LemmaData, LemmaReport, lemma_m2_data, lemma_m2_check, GENERATOR_LABELS
from .sweep import RankRecord, sample_points, rank_sweep, standard_actions


__all__ = ["LinearAction", "standard_symplectic_form", "block_symplectic_form", "MomentSystem", "LemmaData",
           "LemmaReport", "lemma_m2_data", "lemma_m2_check", "GENERATOR_LABELS", "RankRecord", "sample_points",
           "rank_sweep", "standard_actions"]

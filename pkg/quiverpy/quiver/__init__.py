"""
@package quiverpy.quiver
@date 2026-10-16
"""
from . import builders
from . import io

from .PathWord import PathWord, compose
from .Quiver import Quiver, Arrow
from .QuiverPresentation import QuiverPresentation
from .builders import make_AA, make_AA3c, make_EE6, make_B8, make_B8_opposite, make_chain, make_chain_c, \
  builtin_presentation


__all__ = ["builders", "io", "PathWord", "compose", "Quiver", "Arrow", "QuiverPresentation", "make_AA", "make_AA3c",
           "make_EE6", "make_B8", "make_B8_opposite", "make_chain", "make_chain_c", "builtin_presentation"]

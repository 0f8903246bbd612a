"""
@package quiverpy.moment.lemma_m2
@brief Certificate that the projective cover of S_(2,2) for Sp_4 x GL_3 has length two
@details The characteristic ideal of the cover is generated by the operators below. Replacing every dx_(i,j) by
y_(i,j) and dropping constants gives their symbols. The cubic polynomial h lies in the characteristic ideal and does
not vanish at the conormal point v over O_(1,0), while every generator symbol does. So the conormal of O_(1,0) is
not a component of the characteristic variety.
@date 2026-10-16
"""
from __future__ import annotations
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple
from fractions import Fraction
import logging

from ..math import linalg
from ..math.Field import Field
from ..math.MultiPoly import MultiPoly, matrix_variables
from .LinearAction import LinearAction, block_symplectic_form
from .MomentSystem import MomentSystem


__all__ = ["LemmaData", "LemmaReport", "lemma_m2_data", "lemma_m2_check", "GENERATOR_LABELS"]


logger = logging.getLogger(__name__)


_NAMES = tuple(matrix_variables("x", 4, 3) + matrix_variables("y", 4, 3))


def _var(prefix: str, i: int, j: int) -> MultiPoly:
  return MultiPoly.variable(f"{prefix}{i}_{j}", _NAMES)


def _g(a: int, b: int) -> MultiPoly:
  """Symbol of g_(a,b) = sum_k x_(a,k) dx_(b,k)"""
  return sum((_var("x", a, k) * _var("y", b, k) for k in range(1, 4)), MultiPoly.constant(0, _NAMES))


def _h(a: int, b: int) -> MultiPoly:
  """Symbol of h_(a,b) = sum_i x_(i,a) dx_(i,b)"""
  return sum((_var("x", i, a) * _var("y", i, b) for i in range(1, 5)), MultiPoly.constant(0, _NAMES))


GENERATOR_LABELS = ("g11-g33", "g12-g43", "g21-g34", "g22-g44", "g14+g23", "g13", "g24", "g31", "g32+g41", "g42",
                    "h11+2", "h21", "h31", "h22", "h33", "h23", "h32", "h13^3", "h12^3")


class LemmaData(NamedTuple):
  generators: List[MultiPoly]
  h: MultiPoly
  point: Tuple[List[List[int]], List[List[int]]]


def lemma_m2_data() -> LemmaData:
  """
  @brief The generator symbols of I + J, the polynomial h and the point v
  @returns  (generators in GENERATOR_LABELS order, h, v = (x, y) as 4 x 3 matrices)
  """
  I = [_g(1, 1) - _g(3, 3), _g(1, 2) - _g(4, 3), _g(2, 1) - _g(3, 4), _g(2, 2) - _g(4, 4), _g(1, 4) + _g(2, 3),
       _g(1, 3), _g(2, 4), _g(3, 1), _g(3, 2) + _g(4, 1), _g(4, 2)]
  J = [_h(1, 1), _h(2, 1), _h(3, 1), _h(2, 2), _h(3, 3), _h(2, 3), _h(3, 2), _h(1, 3) ** 3, _h(1, 2) ** 3]

  x, y = lambda i, j: _var("x", i, j), lambda i, j: _var("y", i, j)
  h = x(2, 1) * y(2, 3) * y(3, 2) - x(2, 1) * y(2, 2) * y(3, 3) - x(1, 1) * y(2, 3) * y(4, 2) \
    + x(1, 1) * y(2, 2) * y(4, 3) - x(4, 1) * y(3, 3) * y(4, 2) + x(4, 1) * y(3, 2) * y(4, 3)

  v_x = [[1, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]]
  v_y = [[0, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1]]
  return LemmaData(I + J, h, (v_x, v_y))


def _point_values(point: Tuple[Sequence[Sequence[int]], Sequence[Sequence[int]]]) -> Dict[str, Fraction]:
  values = {}
  for prefix, M in zip(("x", "y"), point):
    for i, row in enumerate(M):
      for j, value in enumerate(row):
        values[f"{prefix}{i + 1}_{j + 1}"] = Fraction(value)
  return values


def _coefficient_rows(polys: Sequence[MultiPoly]) -> Tuple[List[List[Fraction]], int]:
  monomials = sorted({m for p in polys for m in p.terms()})
  rows = [[p.terms().get(m, Fraction(0)) for m in monomials] for p in polys]
  return rows, len(monomials)


def _span_rank(polys: Sequence[MultiPoly]) -> int:
  rows, width = _coefficient_rows(polys)
  if width == 0:
    return 0
  return linalg.rank(linalg.matrix(rows, Field.rationals()))


def _symplectic_consistency(generators: Sequence[MultiPoly]) -> Tuple[bool, str]:
  """The ten I symbols span the moment polynomials of sp_4 for the block form"""
  I = list(generators[:10])
  action = LinearAction.sp_gl(2, 3, block_symplectic_form(2))
  sp = MomentSystem(action).moment_polys()[:10]
  own, theirs, joint = _span_rank(I), _span_rank(sp), _span_rank(I + sp)
  return own == theirs == joint == 10, f"rank {own}, sp_4 rank {theirs}, joint rank {joint}"


class LemmaReport:
  """Values of every generator symbol and of h at v"""

  def __init__(self, values: Dict[str, Fraction], h_value: Fraction, symplectic_ok: bool, symplectic_note: str) -> None:
    self.__values          = dict(values)
    self.__h_value         = h_value
    self.__symplectic_ok   = symplectic_ok
    self.__symplectic_note = symplectic_note


  def __bool__(self) -> bool:
    return self.passed


  def __str__(self) -> str:
    """Simple string representation"""
    return f"h(v) = {self.__h_value}: {'PASS' if self.passed else 'FAIL'}"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return self.to_text()


  @property
  def values(self) -> Dict[str, Fraction]:
    """Generator symbols at v, keyed by label"""
    return dict(self.__values)


  @property
  def h_value(self) -> Fraction:
    return self.__h_value


  @property
  def generators_vanish(self) -> bool:
    return all(value == 0 for value in self.__values.values())


  @property
  def symplectic_consistent(self) -> bool:
    """Whether the I symbols are the sp_4 moment polynomials of the block symplectic form"""
    return self.__symplectic_ok


  @property
  def passed(self) -> bool:
    return self.generators_vanish and self.__h_value != 0 and self.__symplectic_ok


  def to_text(self) -> str:
    lines = [f"generator symbols at v: {'all zero' if self.generators_vanish else 'NONZERO'}"]
    for label, value in self.__values.items():
      lines.append(f"  {label:<8} {value}")
    lines.append(f"sp_4 block form: {'consistent' if self.__symplectic_ok else 'INCONSISTENT'} ({self.__symplectic_note})")
    lines.append(f"h(v) = {self.__h_value}")
    lines.append("PASS" if self.passed else "FAIL")
    return "\n".join(lines)


  def to_dict(self) -> Dict[str, Any]:
    return {
      "generators"            : {label: str(value) for label, value in self.__values.items()},
      "generators_vanish"     : self.generators_vanish,
      "symplectic_consistent" : self.__symplectic_ok,
      "h_value"               : str(self.__h_value),
      "passed"                : self.passed
    }


def lemma_m2_check() -> LemmaReport:
  """
  @brief Evaluates the generator symbols and h at v
  @returns  The report, passing iff every symbol vanishes, h(v) != 0 and the symbols match the block form
  """
  data   = lemma_m2_data()
  values = _point_values(data.point)
  report = LemmaReport({label: g.eval(values) for label, g in zip(GENERATOR_LABELS, data.generators)},
                       data.h.eval(values), *_symplectic_consistency(data.generators))
  logger.info("Length two certificate: %s", report)
  return report

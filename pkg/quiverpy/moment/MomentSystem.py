"""
@package quiverpy.moment.MomentSystem
@brief Moment map components H_xi of a linear action and the two rank computations
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, List, Sequence, Tuple
from fractions import Fraction
import logging

from ..exceptions import PolynomialError
from ..math import linalg
from ..math.Field import Field
from ..math.MultiPoly import MultiPoly
from .LinearAction import LinearAction


__all__ = ["MomentSystem"]


logger = logging.getLogger(__name__)


Point = Tuple[Sequence[Sequence[object]], Sequence[Sequence[object]]]


class MomentSystem:
  """
  @brief The bilinear polynomials H_xi(x, y) = <xi.x, y> of a linear action
  @details At every point of the cotangent space the gradients of the H_xi span a space of the same dimension as
  the vector fields xi_M = (xi.x, -xi*.y), the gradient of H_xi being (xi*.y, xi.x) in (x, y) coordinates.
  """

  def __init__(self, action: LinearAction) -> None:
    """
    @brief Constructor
    @param action  The linear action
    @returns       None
    """
    self.__action = action
    self.__names  = tuple(action.x_names + action.y_names)
    self.__polys  = tuple(self.__build(k) for k in range(action.dim))
    self.__gradients = None

    x_names = action.x_names
    for H in self.__polys:
      assert H.is_zero or (H.degree_in(x_names) == (1, 1) and H.degree_in(action.y_names) == (1, 1)), \
        f"Moment polynomial is not bilinear! ({H})"


  def __build(self, k: int) -> MultiPoly:
    """H_xi = sum_ij (A x - x B)_ij y_ij"""
    A, B = self.__action.basis[k]
    r, c = self.__action.rows, self.__action.cols
    A, B = linalg.entries(A), linalg.entries(B)
    index = {name: position for position, name in enumerate(self.__names)}

    terms = {}
    def add(x_name: str, y_name: str, coeff) -> None:
      if coeff == 0:
        return
      monom = [0] * len(self.__names)
      monom[index[x_name]] += 1
      monom[index[y_name]] += 1
      key = tuple(monom)
      terms[key] = terms.get(key, Fraction(0)) + Fraction(int(coeff.numerator), int(coeff.denominator))

    for i in range(r):
      for j in range(c):
        y_name = f"y{i + 1}_{j + 1}"
        for l in range(r):
          add(f"x{l + 1}_{j + 1}", y_name, A[i][l])
        for l in range(c):
          add(f"x{i + 1}_{l + 1}", y_name, -B[l][j])
    return MultiPoly.from_terms(terms, self.__names)


  def __str__(self) -> str:
    """Simple string representation"""
    return f"Moment system of {self.__action}: {len(self.__polys)} polynomials"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return "\n".join([str(self)] + [f"  H_{k + 1} = {H}" for k, H in enumerate(self.__polys)])


  @property
  def action(self) -> LinearAction:
    return self.__action


  @property
  def names(self) -> Tuple[str, ...]:
    """Variables x then y"""
    return self.__names


  def moment_polys(self) -> List[MultiPoly]:
    """The polynomials H_xi, one per basis element"""
    return list(self.__polys)


  def point_values(self, point: Point) -> Dict[str, Fraction]:
    """
    @brief Assignment of the variables at a point
    @param point             Pair (x, y) of nested lists of rationals
    @raises PolynomialError  Raised if the dimensions do not match the action
    """
    if len(point) != 2:
      raise PolynomialError(f"A point is a pair (x, y)! (got {len(point)} parts)")
    x, y = (self.__action.matrix(part) for part in point)
    field = Field.rationals()
    values = {}
    for prefix, M in (("x", x), ("y", y)):
      for i, row in enumerate(linalg.entries(M)):
        for j, value in enumerate(row):
          values[f"{prefix}{i + 1}_{j + 1}"] = field.to_python(value)
    return values


  def jacobian_rank(self, point: Point) -> int:
    """
    @brief Rank of the gradients of all H_xi at a point
    @raises PolynomialError  Raised on a dimension mismatch
    """
    values = self.point_values(point)
    if self.__gradients is None:
      self.__gradients = [[H.diff(name) for name in self.__names] for H in self.__polys]
    if len(self.__gradients) == 0:
      return 0
    rows = [[dH.eval(values) for dH in gradient] for gradient in self.__gradients]
    return linalg.rank(linalg.matrix(rows, Field.rationals()))


  def orbit_tangent_rank(self, point: Point) -> int:
    """
    @brief Dimension of the span of the vector fields xi_M = (xi.x, -xi*.y) at a point
    @raises PolynomialError  Raised on a dimension mismatch
    """
    if len(point) != 2:
      raise PolynomialError(f"A point is a pair (x, y)! (got {len(point)} parts)")
    x, y = (self.__action.matrix(part) for part in point)
    if self.__action.dim == 0:
      return 0
    rows = []
    for k in range(self.__action.dim):
      moved = [e for row in linalg.entries(self.__action.act(k, x)) for e in row]
      dual  = [-e for row in linalg.entries(self.__action.act_dual(k, y)) for e in row]
      rows.append(moved + dual)
    rank = linalg.rank(linalg.matrix(rows, Field.rationals()))
    logger.debug("Orbit tangent rank %d for %s", rank, self.__action.name)
    return rank

"""
@package quiverpy.math.MultiPoly
@brief Sparse multivariate polynomials with rational coefficients
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, List, Mapping, Sequence, Tuple, Union
from fractions import Fraction
from functools import lru_cache
from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from ..exceptions import PolynomialError


__all__ = ["MultiPoly", "matrix_variables"]


@lru_cache(maxsize=None)
def _ring(names: Tuple[str, ...]) -> PolyRing:
  """Polynomial ring over QQ in the given variables, lex ordered"""
  return PolyRing(names if len(names) > 0 else ("t",), QQ, lex)


def _merge(first: Tuple[str, ...], second: Tuple[str, ...]) -> Tuple[str, ...]:
  return first + tuple(name for name in second if name not in first)


def _rational(value) -> Fraction:
  if isinstance(value, str):
    return Fraction(value)
  if isinstance(value, (int, Fraction)):
    return Fraction(value)
  return Fraction(int(value.numerator), int(value.denominator))


def matrix_variables(prefix: str, rows: int, cols: int) -> List[str]:
  """Variable names prefix{i}_{j} for a rows x cols matrix, 1-based and row-major"""
  return [f"{prefix}{i}_{j}" for i in range(1, rows + 1) for j in range(1, cols + 1)]


class MultiPoly:
  """
  @brief Immutable polynomial over Q in named variables
  @details A thin wrapper around a sympy PolyElement, which already stores a sparse map from exponent tuples to
  coefficients with no zero coefficients. Polynomials in different variable sets are combined in the ring of the
  union of the sets.
  """

  def __init__(self, element, names: Sequence[str]) -> None:
    """
    @brief Constructor
    @param element  A PolyElement of the ring over `names`
    @param names    Variable names of the ring
    @returns        None
    """
    self.__names   = tuple(names)
    self.__element = element


  @classmethod
  def variable(cls, name: str, names: Sequence[str] = None) -> MultiPoly:
    """The polynomial consisting of a single variable"""
    names = tuple(names) if names is not None else (name,)
    if name not in names:
      names = names + (name,)
    R = _ring(names)
    return cls(R.gens[names.index(name)], names)


  @classmethod
  def constant(cls, value: Union[int, Fraction, str], names: Sequence[str] = ()) -> MultiPoly:
    """A constant polynomial"""
    c = _rational(value)
    R = _ring(tuple(names))
    return cls(R.ground_new(QQ(c.numerator, c.denominator)), tuple(names))


  @classmethod
  def from_terms(cls, terms: Mapping[Tuple[int, ...], Union[int, Fraction]], names: Sequence[str]) -> MultiPoly:
    """Builds a polynomial from a map of exponent tuples (ordered like `names`) to coefficients"""
    R = _ring(tuple(names))
    data = {}
    for monom, coeff in terms.items():
      c = _rational(coeff)
      if c != 0:
        data[tuple(monom)] = QQ(c.numerator, c.denominator)
    return cls(R.from_dict(data) if data else R.zero, tuple(names))


  def __coerce(self, other: Union[MultiPoly, int, Fraction]) -> Tuple[object, object, Tuple[str, ...]]:
    """Both operands as elements of a common ring"""
    if not isinstance(other, MultiPoly):
      other = MultiPoly.constant(other, self.__names)
    if other.names == self.__names:
      return self.__element, other.element, self.__names
    names = _merge(self.__names, other.names)
    return self.__lift(self.__element, self.__names, names), self.__lift(other.element, other.names, names), names


  @staticmethod
  def __lift(element, names: Tuple[str, ...], target_names: Tuple[str, ...]):
    R = _ring(target_names)
    positions = [target_names.index(name) for name in names]
    data = {}
    for monom, coeff in element.items():
      target = [0] * R.ngens
      for position, exp in zip(positions, monom):
        target[position] = exp
      data[tuple(target)] = coeff
    return R.from_dict(data) if data else R.zero


  def __add__(self, other) -> MultiPoly:
    a, b, names = self.__coerce(other)
    return MultiPoly(a + b, names)


  def __radd__(self, other) -> MultiPoly:
    return self + other


  def __sub__(self, other) -> MultiPoly:
    a, b, names = self.__coerce(other)
    return MultiPoly(a - b, names)


  def __rsub__(self, other) -> MultiPoly:
    return (-self) + other


  def __mul__(self, other) -> MultiPoly:
    a, b, names = self.__coerce(other)
    return MultiPoly(a * b, names)


  def __rmul__(self, other) -> MultiPoly:
    return self * other


  def __neg__(self) -> MultiPoly:
    return MultiPoly(-self.__element, self.__names)


  def __pow__(self, exponent: int) -> MultiPoly:
    assert exponent >= 0, f"Only nonnegative powers are supported! ({exponent})"
    return MultiPoly(self.__element ** exponent, self.__names)


  def __eq__(self, other: object) -> bool:
    if not isinstance(other, (MultiPoly, int, Fraction)):
      return NotImplemented
    a, b, _ = self.__coerce(other)
    return a == b


  def __hash__(self) -> int:
    return hash(frozenset(self.terms().items()))


  def __str__(self) -> str:
    """Simple string representation"""
    return str(self.__element.as_expr())


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"MultiPoly({self}; variables={list(self.variables)})"


  @property
  def names(self) -> Tuple[str, ...]:
    """Variables of the ambient ring"""
    return self.__names


  @property
  def element(self):
    """The underlying sympy PolyElement"""
    return self.__element


  @property
  def variables(self) -> Tuple[str, ...]:
    """Variables that actually occur, in ring order"""
    used = set()
    for monom in self.__element.keys():
      used.update(k for k, exp in enumerate(monom) if exp > 0)
    return tuple(name for k, name in enumerate(self.__names) if k in used)


  @property
  def is_zero(self) -> bool:
    return not self.__element


  def terms(self) -> Dict[Tuple[Tuple[str, int], ...], Fraction]:
    """
    @brief Sparse term map independent of the ambient ring
    @returns  Map from monomials, as sorted (variable, exponent) pairs, to coefficients
    """
    result = {}
    for monom, coeff in self.__element.items():
      key = tuple(sorted((self.__names[k], exp) for k, exp in enumerate(monom) if exp > 0)) if self.__names else ()
      result[key] = _rational(coeff)
    return result


  def degree_in(self, names: Sequence[str]) -> Tuple[int, int]:
    """
    @brief Minimal and maximal degree of the monomials in a subset of the variables
    @returns  (min degree, max degree), (0, 0) for the zero polynomial
    """
    wanted = set(names)
    degrees = [sum(exp for k, exp in enumerate(monom) if self.__names and self.__names[k] in wanted)
               for monom in self.__element.keys()]
    if len(degrees) == 0:
      return 0, 0
    return min(degrees), max(degrees)


  def diff(self, name: str) -> MultiPoly:
    """Partial derivative with respect to a variable. Zero if the variable is not in the ring"""
    if name not in self.__names:
      return MultiPoly(self.__element.ring.zero, self.__names)
    R = self.__element.ring
    return MultiPoly(self.__element.diff(R.gens[self.__names.index(name)]), self.__names)


  def eval(self, point: Mapping[str, Union[int, Fraction, str]]) -> Fraction:
    """
    @brief Exact evaluation
    @param point             Values of the variables. Extra keys are ignored
    @raises PolynomialError  Raised if a variable occurring in the polynomial has no value
    @returns                 The value
    """
    missing = [name for name in self.variables if name not in point]
    if missing:
      raise PolynomialError(f"Point does not assign every variable! (missing {missing})")

    total = Fraction(0)
    for monom, coeff in self.__element.items():
      term = _rational(coeff)
      for k, exp in enumerate(monom):
        if exp > 0:
          term *= _rational(point[self.__names[k]]) ** exp
      total += term
    return total

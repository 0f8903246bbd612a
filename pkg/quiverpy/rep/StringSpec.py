"""
@package quiverpy.rep.StringSpec
@brief Labels of the string modules I_{i,j}^Sigma of the chain quivers AA_n
@date 2026-10-16
"""
from __future__ import annotations
from typing import Tuple

from ..exceptions import RepresentationError


__all__ = ["StringSpec"]


class StringSpec:
  """
  @brief Interval [i, j] in the chain (1), ..., (n) together with a sign word of length j - i
  @details Sign l (1-based) concerns the edge between (i+l-1) and (i+l): '+' means the rightward arrow acts as the
  identity, '-' the leftward one.
  """

  def __init__(self, n: int, i: int, j: int, signs: str = "") -> None:
    """
    @brief Constructor
    @param n                    Length of the chain
    @param i                    Left end of the support
    @param j                    Right end of the support
    @param signs                Word over {'+', '-'} of length j - i. The unicode minus is accepted
    @raises RepresentationError  Raised for invalid intervals or sign words
    @returns                    None
    """
    signs = signs.replace("−", "-")
    if not (1 <= i <= j <= n):
      raise RepresentationError(f"Invalid interval! (need 1 <= {i} <= {j} <= {n})")
    if len(signs) != j - i or any(s not in "+-" for s in signs):
      raise RepresentationError(f"Invalid sign word! ({signs!r} must have {j - i} signs from '+-')")

    self.__n     = n
    self.__i     = i
    self.__j     = j
    self.__signs = signs


  def __str__(self) -> str:
    """Simple string representation"""
    return f"I_{{{self.__i},{self.__j}}}^{{{self.__signs}}}"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"StringSpec(n={self.__n}, i={self.__i}, j={self.__j}, signs={self.__signs!r})"


  def __eq__(self, other: object) -> bool:
    if not isinstance(other, StringSpec):
      return NotImplemented
    return self.key() == other.key()


  def __lt__(self, other: StringSpec) -> bool:
    return self.key() < other.key()


  def __hash__(self) -> int:
    return hash(self.key())


  def key(self) -> Tuple[int, int, int, str]:
    return self.__n, self.__i, self.__j, self.__signs


  @property
  def n(self) -> int:
    """Length of the chain"""
    return self.__n


  @property
  def i(self) -> int:
    """Left end of the support"""
    return self.__i


  @property
  def j(self) -> int:
    """Right end of the support"""
    return self.__j


  @property
  def signs(self) -> str:
    """The sign word"""
    return self.__signs


  @property
  def dim_vector(self) -> Tuple[int, ...]:
    return tuple(1 if self.__i <= k <= self.__j else 0 for k in range(1, self.__n + 1))

"""
@package quiverpy.reptype.CensusReport
@brief Result of a finite-field census of representations
@date 2026-10-16
"""
from __future__ import annotations
from typing import Any, Dict, List, Sequence, Tuple
import pandas as pd

from ..quiver.QuiverPresentation import QuiverPresentation
from ..rep.Rep import Rep


__all__ = ["CensusReport"]


def _render_maps(V: Rep) -> str:
  parts = []
  for arrow in V.presentation.arrows:
    if V.dim(arrow.head) > 0 and V.dim(arrow.tail) > 0:
      parts.append(f"{arrow.id}={V.rows(arrow.id)}")
  return " ".join(parts)


class CensusReport:
  """
  @brief Isomorphism classes found by a census
  @details Classes are listed in enumeration order, each represented by the lexicographically least matrix
  assignment in its class.
  """

  def __init__(self, presentation: QuiverPresentation, bound: Sequence[int], p: int, classes: Sequence[Rep],
               indecomposables: Sequence[Rep]) -> None:
    """
    @brief Constructor
    @param presentation     The quiver with relations
    @param bound            The dimension vector (or entrywise bound for a union of censuses)
    @param p                The prime
    @param classes          Representatives of all isomorphism classes
    @param indecomposables  Representatives of the indecomposable classes
    @returns                None
    """
    self.__presentation    = presentation
    self.__bound           = tuple(bound)
    self.__p               = p
    self.__classes         = tuple(classes)
    self.__indecomposables = tuple(indecomposables)


  def __str__(self) -> str:
    """Simple string representation"""
    return f"Census over F_{self.__p} up to {self.__bound}: {self.class_count} classes, " \
           f"{self.indecomposable_count} indecomposable"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return self.to_text()


  @property
  def presentation(self) -> QuiverPresentation:
    return self.__presentation


  @property
  def bound(self) -> Tuple[int, ...]:
    """The dimension vector or entrywise dimension bound"""
    return self.__bound


  @property
  def p(self) -> int:
    """The prime"""
    return self.__p


  @property
  def classes(self) -> Tuple[Rep, ...]:
    """Representatives of every isomorphism class"""
    return self.__classes


  @property
  def representatives(self) -> Tuple[Rep, ...]:
    """Representatives of the indecomposable classes"""
    return self.__indecomposables


  @property
  def class_count(self) -> int:
    return len(self.__classes)


  @property
  def indecomposable_count(self) -> int:
    return len(self.__indecomposables)


  def merge(self, other: CensusReport, bound: Sequence[int]) -> CensusReport:
    """Union of two censuses at different dimension vectors"""
    assert self.__p == other.p, f"Censuses over different primes! ({self.__p} != {other.p})"
    return CensusReport(self.__presentation, bound, self.__p, self.__classes + other.classes,
                        self.__indecomposables + other.representatives)


  def to_text(self) -> str:
    """Stable line-oriented rendering: one line per indecomposable class"""
    lines = [str(self)]
    for k, V in enumerate(self.__indecomposables, start=1):
      dims = ",".join(str(d) for d in V.dim_vector)
      lines.append(f"[{k}] dims=({dims}) {_render_maps(V)}".rstrip())
    return "\n".join(lines)


  def to_dict(self) -> Dict[str, Any]:
    """Machine-readable rendering"""
    return {
      "prime"                : self.__p,
      "bound"                : list(self.__bound),
      "vertices"             : list(self.__presentation.vertices),
      "class_count"          : self.class_count,
      "indecomposable_count" : self.indecomposable_count,
      "indecomposables"      : [{"dims": V.dims, "maps": {a.id: V.rows(a.id) for a in V.presentation.arrows
                                                          if V.dim(a.head) > 0 and V.dim(a.tail) > 0}}
                                for V in self.__indecomposables]
    }


  def to_frame(self) -> pd.DataFrame:
    """Counts of classes and indecomposables per dimension vector"""
    rows = {}
    for V in self.__classes:
      rows.setdefault(V.dim_vector, [0, 0])[0] += 1
    for V in self.__indecomposables:
      rows.setdefault(V.dim_vector, [0, 0])[1] += 1
    frame = pd.DataFrame([[str(dims), counts[0], counts[1]] for dims, counts in rows.items()],
                         columns=["dims", "classes", "indecomposable"])
    return frame

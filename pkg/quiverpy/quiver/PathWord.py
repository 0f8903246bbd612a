"""
@package quiverpy.quiver.PathWord
@brief Paths in a quiver as composable arrow words
@date 2026-10-16
"""
from __future__ import annotations
from typing import Sequence, Tuple

from ..exceptions import QuiverError


__all__ = ["PathWord", "compose"]


class PathWord:
  """
  @brief A path in a quiver
  @details Arrows are listed in tail-to-head order, so the path (a_1, ..., a_k) first traverses a_1. The empty word
  at a vertex is the trivial path of that vertex. Composability against a concrete quiver is checked by
  Quiver.path, the class itself only tracks the endpoints.
  """

  def __init__(self, arrows: Sequence[str], source: str, target: str) -> None:
    """
    @brief Constructor
    @param arrows       Arrow ids in tail-to-head order
    @param source       The starting vertex
    @param target       The ending vertex
    @raises QuiverError  Raised if a trivial path has different endpoints
    @returns            None
    """
    if len(arrows) == 0 and source != target:
      raise QuiverError(f"A trivial path must start and end at the same vertex! ({source} != {target})")

    self.__arrows = tuple(arrows)
    self.__source = source
    self.__target = target


  @classmethod
  def trivial(cls, vertex: str) -> PathWord:
    """The trivial path e_x at a vertex"""
    return cls((), vertex, vertex)


  def compose(self, other: PathWord) -> PathWord:
    """
    @brief Concatenation: first this path, then the other
    @param other        The path to append
    @raises QuiverError  Raised if the target of this path is not the source of the other
    @returns            The concatenated path from source(self) to target(other)
    """
    if self.__target != other.source:
      raise QuiverError(f"Endpoints do not compose! ({self.__target} != {other.source})")
    return PathWord(self.__arrows + other.arrows, self.__source, other.target)


  def contains(self, word: PathWord) -> bool:
    """Whether the word occurs as a contiguous subword of this path"""
    k = len(word)
    if k == 0:
      return False
    inner = word.arrows
    return any(self.__arrows[i:i + k] == inner for i in range(len(self.__arrows) - k + 1))


  def reversed(self) -> PathWord:
    """The same word read in the opposite quiver"""
    return PathWord(tuple(reversed(self.__arrows)), self.__target, self.__source)


  def sort_key(self) -> Tuple[int, Tuple[str, ...], str]:
    """Ordering by length, then lexicographically on the arrow ids"""
    return len(self.__arrows), self.__arrows, self.__source


  def __len__(self) -> int:
    return len(self.__arrows)


  def __eq__(self, other: object) -> bool:
    if not isinstance(other, PathWord):
      return NotImplemented
    return self.__arrows == other.arrows and self.__source == other.source and self.__target == other.target


  def __hash__(self) -> int:
    return hash((self.__arrows, self.__source, self.__target))


  def __str__(self) -> str:
    """Simple string representation"""
    if len(self.__arrows) == 0:
      return f"e{self.__source}"
    return "".join(self.__arrows) if all(len(a) == 1 for a in self.__arrows) else " ".join(self.__arrows)


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"PathWord({list(self.__arrows)}: {self.__source} -> {self.__target})"


  @property
  def arrows(self) -> Tuple[str, ...]:
    """Arrow ids in tail-to-head order"""
    return self.__arrows


  @property
  def source(self) -> str:
    """Starting vertex"""
    return self.__source


  @property
  def target(self) -> str:
    """Ending vertex"""
    return self.__target


  @property
  def is_trivial(self) -> bool:
    return len(self.__arrows) == 0


def compose(p: PathWord, q: PathWord) -> PathWord:
  """Concatenation of p followed by q"""
  return p.compose(q)

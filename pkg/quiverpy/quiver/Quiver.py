"""
@package quiverpy.quiver.Quiver
@brief Finite quivers
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, List, NamedTuple, Sequence, Tuple

from ..exceptions import QuiverError
from .PathWord import PathWord


__all__ = ["Arrow", "Quiver"]


class Arrow(NamedTuple):
  """An arrow id with its tail and head vertices"""
  id: str
  tail: str
  head: str


class Quiver:
  """
  @brief Finite directed multigraph
  @details Vertex ids are opaque strings. Arrows keep the order in which they were given.
  """

  def __init__(self, vertices: Sequence[object], arrows: Sequence[Tuple[object, object, object]]) -> None:
    """
    @brief Constructor
    @param vertices     Ordered vertex ids. Non-string ids are converted with str
    @param arrows       Triples (arrow id, tail, head)
    @raises QuiverError  Raised on duplicate ids or arrows referencing unknown vertices
    @returns            None
    """
    vertices = tuple(str(v) for v in vertices)
    if len(set(vertices)) != len(vertices):
      raise QuiverError(f"Vertex ids must be unique! ({list(vertices)})")

    arrow_list = tuple(Arrow(str(a), str(t), str(h)) for a, t, h in arrows)
    ids = [arrow.id for arrow in arrow_list]
    if len(set(ids)) != len(ids):
      raise QuiverError(f"Arrow ids must be unique! ({ids})")

    known = set(vertices)
    for arrow in arrow_list:
      if arrow.tail not in known or arrow.head not in known:
        raise QuiverError(f"Arrow references an unknown vertex! ({arrow.id}: {arrow.tail} -> {arrow.head})")

    self.__vertices = vertices
    self.__arrows   = arrow_list
    self.__by_id    = {arrow.id: arrow for arrow in arrow_list}
    self.__index    = {v: i for i, v in enumerate(vertices)}


  def __str__(self) -> str:
    """Simple string representation"""
    return f"Quiver with {len(self.__vertices)} vertices and {len(self.__arrows)} arrows"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    arrows = ", ".join(f"{a.id}: {a.tail} -> {a.head}" for a in self.__arrows)
    return f"Quiver(vertices={list(self.__vertices)}, arrows=[{arrows}])"


  def __eq__(self, other: object) -> bool:
    if not isinstance(other, Quiver):
      return NotImplemented
    return self.__vertices == other.vertices and set(self.__arrows) == set(other.arrows)


  def __hash__(self) -> int:
    return hash((self.__vertices, frozenset(self.__arrows)))


  @property
  def vertices(self) -> Tuple[str, ...]:
    """Ordered vertex ids"""
    return self.__vertices


  @property
  def arrows(self) -> Tuple[Arrow, ...]:
    """Arrows in the given order"""
    return self.__arrows


  def arrow(self, arrow_id: str) -> Arrow:
    """
    @brief Looks up an arrow
    @raises QuiverError  Raised for an unknown arrow id
    """
    try:
      return self.__by_id[arrow_id]
    except KeyError:
      raise QuiverError(f"Unknown arrow id! ({arrow_id!r})")


  def index(self, vertex: str) -> int:
    """
    @brief Position of a vertex in the vertex order
    @raises QuiverError  Raised for an unknown vertex
    """
    try:
      return self.__index[vertex]
    except KeyError:
      raise QuiverError(f"Unknown vertex! ({vertex!r} not in {list(self.__vertices)})")


  def has_vertex(self, vertex: str) -> bool:
    return vertex in self.__index


  def outgoing(self, vertex: str) -> List[Arrow]:
    """Arrows with the given tail"""
    return [arrow for arrow in self.__arrows if arrow.tail == vertex]


  def incoming(self, vertex: str) -> List[Arrow]:
    """Arrows with the given head"""
    return [arrow for arrow in self.__arrows if arrow.head == vertex]


  def multiplicities(self) -> Dict[Tuple[str, str], int]:
    """Number of arrows for every (tail, head) pair that has any"""
    counts = {}
    for arrow in self.__arrows:
      counts[(arrow.tail, arrow.head)] = counts.get((arrow.tail, arrow.head), 0) + 1
    return counts


  def path(self, arrow_ids: Sequence[str], source: str = None) -> PathWord:
    """
    @brief Builds a validated path from arrow ids
    @param arrow_ids    Arrow ids in tail-to-head order
    @param source       Vertex of a trivial path. Ignored for nonempty words
    @raises QuiverError  Raised on unknown ids or consecutive arrows that do not compose
    @returns            The path
    """
    if len(arrow_ids) == 0:
      if source is None:
        raise QuiverError("A trivial path needs a vertex!")
      self.index(source)
      return PathWord.trivial(source)

    arrows = [self.arrow(a) for a in arrow_ids]
    for first, second in zip(arrows, arrows[1:]):
      if first.head != second.tail:
        raise QuiverError(f"Arrows do not compose! ({first.id} ends at {first.head}, {second.id} starts at {second.tail})")
    return PathWord([a.id for a in arrows], arrows[0].tail, arrows[-1].head)


  def validate_path(self, path: PathWord) -> PathWord:
    """
    @brief Checks that a path lives in this quiver
    @raises QuiverError  Raised if the arrows or endpoints do not match the quiver
    """
    rebuilt = self.path(path.arrows, path.source)
    if rebuilt != path:
      raise QuiverError(f"Path endpoints do not match its arrows! ({path!r})")
    return path


  def opposite(self) -> Quiver:
    """The quiver with every arrow reversed"""
    return Quiver(self.__vertices, [(a.id, a.head, a.tail) for a in self.__arrows])

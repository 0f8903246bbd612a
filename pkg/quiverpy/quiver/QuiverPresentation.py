"""
@package quiverpy.quiver.QuiverPresentation
@brief Quivers with monomial relations and their nonzero paths
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple
from itertools import permutations, product
import logging
import numpy as np

from ..exceptions import QuiverError
from .PathWord import PathWord
from .Quiver import Quiver


__all__ = ["QuiverPresentation"]


logger = logging.getLogger(__name__)


class QuiverPresentation:
  """
  @brief A finite quiver together with a set of zero paths
  @details A path is zero iff it contains some relation as a contiguous subword. The quiver algebra must be finite
  dimensional, which is checked when the presentation is built.
  """

  def __init__(self, quiver: Quiver, relations: Sequence[object] = ()) -> None:
    """
    @brief Constructor
    @param quiver       The underlying quiver
    @param relations    Relation words, either PathWords or sequences of arrow ids in tail-to-head order
    @raises QuiverError  Raised on invalid relation words or if the quiver algebra is infinite dimensional
    @returns            None
    """
    words = []
    for relation in relations:
      arrow_ids = relation.arrows if isinstance(relation, PathWord) else tuple(relation)
      if len(arrow_ids) < 2:
        raise QuiverError(f"Relations must have length at least 2! ({list(arrow_ids)})")
      word = quiver.path(arrow_ids)
      if word not in words:
        words.append(word)

    self.__quiver    = quiver
    self.__relations = tuple(words)
    self.__paths     = self.__enumerate()


  def __enumerate(self) -> Tuple[PathWord, ...]:
    """
    @brief Depth-first enumeration of the nonzero paths
    @details Whether a nonzero path can be extended depends only on its end vertex and its last (l - 1) arrows,
    l being the longest relation length. If this window repeats along a path, the segment between the repeats
    can be pumped and the algebra is infinite dimensional.
    @raises QuiverError  Raised for infinite dimensional algebras
    """
    window = max([len(r) for r in self.__relations], default=1) - 1
    quiver = self.__quiver
    found  = []

    def state(path: PathWord) -> Tuple[str, Tuple[str, ...]]:
      return path.target, path.arrows[len(path) - window:] if window > 0 else ()

    def extend(path: PathWord, seen: FrozenSet) -> None:
      found.append(path)
      for arrow in quiver.outgoing(path.target):
        longer = PathWord(path.arrows + (arrow.id,), path.source, arrow.head)
        if any(longer.arrows[-len(r):] == r.arrows for r in self.__relations if len(r) <= len(longer)):
          continue
        key = state(longer)
        if len(longer) >= window and key in seen:
          raise QuiverError(f"Infinite algebra! (nonzero path {list(longer.arrows)} can be repeated indefinitely)")
        extend(longer, seen | {key} if len(longer) >= window else seen)

    for vertex in quiver.vertices:
      start = PathWord.trivial(vertex)
      extend(start, frozenset({state(start)}) if window == 0 else frozenset())

    index = {v: i for i, v in enumerate(quiver.vertices)}
    found.sort(key=lambda p: (len(p), p.arrows, index[p.source]))
    logger.debug("Enumerated %d nonzero paths", len(found))
    return tuple(found)


  def __str__(self) -> str:
    """Simple string representation"""
    return f"{self.__quiver} and {len(self.__relations)} relations"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    relations = ", ".join(" ".join(r.arrows) for r in self.__relations)
    return f"{self.__quiver!r}\nRelations: [{relations}]"


  def __eq__(self, other: object) -> bool:
    if not isinstance(other, QuiverPresentation):
      return NotImplemented
    return self.__quiver == other.quiver and set(self.__relations) == set(other.relations)


  def __hash__(self) -> int:
    return hash((self.__quiver, frozenset(self.__relations)))


  @property
  def quiver(self) -> Quiver:
    """The underlying quiver"""
    return self.__quiver


  @property
  def relations(self) -> Tuple[PathWord, ...]:
    """The zero paths generating the relations"""
    return self.__relations


  @property
  def vertices(self) -> Tuple[str, ...]:
    return self.__quiver.vertices


  @property
  def arrows(self):
    return self.__quiver.arrows


  def is_zero_path(self, path: PathWord) -> bool:
    """
    @brief Whether a path vanishes in the quiver algebra
    @raises QuiverError  Raised if the path is not a path of the quiver
    """
    self.__quiver.validate_path(path)
    return any(path.contains(r) for r in self.__relations)


  def nonzero_paths(self) -> List[PathWord]:
    """
    @brief Basis of the quiver algebra
    @returns  All nonzero paths including the trivial ones, ordered by length and then by arrow ids
    """
    return list(self.__paths)


  def paths_between(self, source: str, target: str) -> List[PathWord]:
    """Nonzero paths from source to target"""
    return [p for p in self.__paths if p.source == source and p.target == target]


  def cartan_matrix(self) -> np.ndarray:
    """
    @brief Matrix of nonzero path counts
    @details Entry (x, y) counts the nonzero paths from x to y, rows and columns follow the vertex order. Row x is
    the dimension vector of the projective cover of the simple at x.
    """
    n = len(self.vertices)
    C = np.zeros((n, n), dtype=int)
    for path in self.__paths:
      C[self.__quiver.index(path.source), self.__quiver.index(path.target)] += 1
    return C


  def opposite(self) -> QuiverPresentation:
    """Presentation with every arrow and relation word reversed"""
    return QuiverPresentation(self.__quiver.opposite(), [r.reversed().arrows for r in self.__relations])


  def relabel(self, vertex_map: Mapping[str, str]) -> QuiverPresentation:
    """
    @brief Renames vertices, keeping arrow ids
    @param vertex_map   Map from old to new vertex ids. Unmapped vertices keep their id
    @returns            The relabeled presentation
    """
    rename = lambda v: str(vertex_map.get(v, v))
    quiver = Quiver([rename(v) for v in self.vertices], [(a.id, rename(a.tail), rename(a.head)) for a in self.arrows])
    return QuiverPresentation(quiver, [r.arrows for r in self.__relations])


  def disjoint_union(self, other: QuiverPresentation) -> QuiverPresentation:
    """
    @brief Disjoint union of two presentations
    @raises QuiverError  Raised if the vertex or arrow ids overlap
    """
    quiver = Quiver(self.vertices + other.vertices,
                    [tuple(a) for a in self.arrows] + [tuple(a) for a in other.arrows])
    return QuiverPresentation(quiver, [r.arrows for r in self.__relations] + [r.arrows for r in other.relations])


  @classmethod
  def isolated(cls, vertices: Sequence[object]) -> QuiverPresentation:
    """Presentation consisting of isolated vertices only"""
    return cls(Quiver(vertices, []), [])


  def connected_components(self) -> List[FrozenSet[str]]:
    """Vertex sets of the connected components of the underlying undirected graph, in vertex order"""
    neighbours = {v: set() for v in self.vertices}
    for arrow in self.arrows:
      neighbours[arrow.tail].add(arrow.head)
      neighbours[arrow.head].add(arrow.tail)

    components, assigned = [], set()
    for vertex in self.vertices:
      if vertex in assigned:
        continue
      component, stack = set(), [vertex]
      while stack:
        v = stack.pop()
        if v not in component:
          component.add(v)
          stack.extend(neighbours[v] - component)
      assigned |= component
      components.append(frozenset(component))
    return components


  def __signature(self, vertex: str) -> Tuple[int, ...]:
    """Data preserved by any isomorphism of presentations"""
    out_deg = sum(1 for a in self.arrows if a.tail == vertex and a.head != vertex)
    in_deg  = sum(1 for a in self.arrows if a.head == vertex and a.tail != vertex)
    loops   = sum(1 for a in self.arrows if a.head == vertex and a.tail == vertex)
    starts  = sum(1 for r in self.__relations if r.source == vertex)
    ends    = sum(1 for r in self.__relations if r.target == vertex)
    return out_deg, in_deg, loops, starts, ends


  def find_isomorphism(self, other: QuiverPresentation,
                       vertex_map: Optional[Mapping[str, str]] = None) -> Optional[Tuple[Dict[str, str], Dict[str, str]]]:
    """
    @brief Searches for an isomorphism of presentations
    @details Vertex bijections are found by backtracking, pruned by vertex signatures and by arrow multiplicities
    between already assigned vertices. The identity on shared labels is tried first. For each vertex bijection the
    arrows are matched within groups of parallel arrows, and the relation words must map onto the relation words.
    @param other        The target presentation
    @param vertex_map   Optional fixed vertex bijection. Only arrow bijections are then searched
    @returns            (vertex map, arrow map) or None
    """
    if len(self.vertices) != len(other.vertices) or len(self.arrows) != len(other.arrows) \
       or len(self.__relations) != len(other.relations):
      return None

    own_mult   = self.__quiver.multiplicities()
    other_mult = other.quiver.multiplicities()
    own_sig    = {v: self.__signature(v) for v in self.vertices}
    other_sig  = {v: other._QuiverPresentation__signature(v) for v in other.vertices}
    if sorted(own_sig.values()) != sorted(other_sig.values()):
      return None

    def consistent(assigned: Dict[str, str], v: str, w: str) -> bool:
      if own_mult.get((v, v), 0) != other_mult.get((w, w), 0):
        return False
      for u, image in assigned.items():
        if own_mult.get((u, v), 0) != other_mult.get((image, w), 0):
          return False
        if own_mult.get((v, u), 0) != other_mult.get((w, image), 0):
          return False
      return True

    def vertex_maps(k: int, assigned: Dict[str, str], used: set):
      if k == len(self.vertices):
        yield dict(assigned)
        return
      v = self.vertices[k]
      candidates = [w for w in other.vertices if w not in used and other_sig[w] == own_sig[v]]
      candidates.sort(key=lambda w: w != v)
      for w in candidates:
        if consistent(assigned, v, w):
          assigned[v] = w
          used.add(w)
          yield from vertex_maps(k + 1, assigned, used)
          del assigned[v]
          used.discard(w)

    if vertex_map is not None:
      fixed = {str(k): str(v) for k, v in vertex_map.items()}
      if set(fixed) != set(self.vertices) or set(fixed.values()) != set(other.vertices):
        return None
      if any(own_mult.get(pair, 0) != other_mult.get((fixed[pair[0]], fixed[pair[1]]), 0)
             for pair in set(own_mult) | {(a, b) for a in self.vertices for b in self.vertices}):
        return None
      candidates = iter([fixed])
    else:
      candidates = vertex_maps(0, {}, set())

    target_relations = {r.arrows for r in other.relations}
    for vmap in candidates:
      arrow_map = self.__match_arrows(other, vmap, target_relations)
      if arrow_map is not None:
        return vmap, arrow_map
    return None


  def __match_arrows(self, other: QuiverPresentation, vmap: Dict[str, str], target_relations: set) -> Optional[Dict[str, str]]:
    """Arrow bijection compatible with a vertex bijection that maps relations onto relations"""
    groups = {}
    for arrow in self.arrows:
      groups.setdefault((arrow.tail, arrow.head), []).append(arrow.id)
    images = {}
    for arrow in other.arrows:
      images.setdefault((arrow.tail, arrow.head), []).append(arrow.id)

    keys    = list(groups)
    choices = []
    for key in keys:
      image = images.get((vmap[key[0]], vmap[key[1]]), [])
      if len(image) != len(groups[key]):
        return None
      choices.append(list(permutations(image)))

    for picked in product(*choices):
      arrow_map = {}
      for key, image in zip(keys, picked):
        arrow_map.update(zip(groups[key], image))
      if {tuple(arrow_map[a] for a in r.arrows) for r in self.__relations} == target_relations:
        return arrow_map
    return None


  def is_isomorphic_to(self, other: QuiverPresentation) -> bool:
    """Whether some vertex and arrow bijection carries this presentation onto the other"""
    return self.find_isomorphism(other) is not None


  def is_self_opposite(self) -> bool:
    """Whether the presentation is isomorphic to its opposite"""
    return self.find_isomorphism(self.opposite()) is not None


  def is_automorphism(self, vertex_map: Mapping[str, str]) -> bool:
    """Whether a vertex permutation extends to an automorphism of the presentation"""
    return self.find_isomorphism(self, vertex_map) is not None

"""
@package quiverpy.atlas.CaseRecord
@brief Orbits, quiver, b-function and Fourier data of a single atlas case
@date 2026-10-16
"""
from __future__ import annotations
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple
from fractions import Fraction

from ..exceptions import AtlasError
from ..quiver.QuiverPresentation import QuiverPresentation
from ..quiver.io import presentation_to_dict
from .CaseId import CaseId


__all__ = ["Orbit", "SemiInvariant", "CaseRecord", "normalize_label"]


class Orbit(NamedTuple):
  """An orbit with its codimension and the order of its component group"""
  label: str
  codim: int
  component_group: int


class SemiInvariant(NamedTuple):
  """Degree of the semi-invariant f and the distinct roots of its b-function"""
  degree: int
  roots: Tuple[Fraction, ...]


def normalize_label(label: object) -> str:
  """
  @brief Printed form of an orbit label
  @details Integers i become '(i)', pairs (r, s) become '(r,s)' and strings lose their whitespace
  """
  if isinstance(label, int):
    return f"({label})"
  if isinstance(label, tuple):
    return "(" + ",".join(str(int(x)) for x in label) + ")"
  return "".join(str(label).split())


class CaseRecord:
  """
  @brief Everything the atlas stores about one case
  @details Vertices of the quiver are simple equivariant D-modules, labeled by an orbit and an irreducible local
  system on it. The local system is 'trivial' or 'sign', the latter only occurring on orbits with component group
  of order 2. Fourier data may be partial, in which case only the listed vertices are known to be exchanged.
  """

  def __init__(self, case_id: CaseId, dim_space: int, orbits: Sequence[Orbit], covers: Sequence[Tuple[str, str]],
               quiver: QuiverPresentation, vertex_labels: Mapping[str, Tuple[str, str]],
               semi_invariant: Optional[SemiInvariant] = None, fourier: Optional[Mapping[str, str]] = None,
               fourier_complete: bool = False, reference: Optional[QuiverPresentation] = None,
               notes: Sequence[str] = ()) -> None:
    """
    @brief Constructor
    @param case_id           The case
    @param dim_space         Dimension of the vector space X
    @param orbits            Orbits from the zero orbit to the open orbit
    @param covers            Cover relations (smaller, larger) of the closure order
    @param quiver            The quiver with relations of the module category
    @param vertex_labels     Map from vertices to (orbit label, local system)
    @param semi_invariant    Degree and b-function roots, None if there is no semi-invariant
    @param fourier           Vertex involution induced by the Fourier transform, possibly partial
    @param fourier_complete  Whether the Fourier data covers every vertex
    @param reference         Builder presentation that the quiver equals up to relabeling and isolated vertices
    @param notes             Provenance notes, one per stored fact
    @returns                 None
    """
    self.__case_id          = case_id
    self.__dim_space        = dim_space
    self.__orbits           = tuple(orbits)
    self.__covers           = tuple(covers)
    self.__quiver           = quiver
    self.__vertex_labels    = dict(vertex_labels)
    self.__semi_invariant   = semi_invariant
    self.__fourier          = None if fourier is None else dict(fourier)
    self.__fourier_complete = fourier_complete and fourier is not None
    self.__reference        = reference
    self.__notes            = tuple(notes)
    self.__orbit_map        = {o.label: o for o in self.__orbits}

    assert set(self.__vertex_labels) == set(quiver.vertices), \
      f"Every vertex needs an orbit label! ({sorted(self.__vertex_labels)} != {sorted(quiver.vertices)})"


  def __str__(self) -> str:
    """Simple string representation"""
    return f"{self.__case_id}: {len(self.__orbits)} orbits, {len(self.__quiver.vertices)} simples, " \
           f"{len(self.__quiver.arrows)} arrows"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return self.to_text()


  @property
  def case_id(self) -> CaseId:
    return self.__case_id


  @property
  def dim_space(self) -> int:
    """Dimension of the vector space"""
    return self.__dim_space


  @property
  def orbits(self) -> Tuple[Orbit, ...]:
    """Orbits ordered from the zero orbit to the open orbit"""
    return self.__orbits


  @property
  def covers(self) -> Tuple[Tuple[str, str], ...]:
    """Cover relations of the closure order"""
    return self.__covers


  @property
  def quiver(self) -> QuiverPresentation:
    return self.__quiver


  @property
  def vertex_labels(self) -> Dict[str, Tuple[str, str]]:
    """Map from vertices to (orbit, local system)"""
    return dict(self.__vertex_labels)


  @property
  def semi_invariant(self) -> Optional[SemiInvariant]:
    return self.__semi_invariant


  @property
  def fourier(self) -> Optional[Dict[str, str]]:
    """The Fourier vertex involution, None where it is not stored"""
    return None if self.__fourier is None else dict(self.__fourier)


  @property
  def fourier_complete(self) -> bool:
    """Whether the Fourier involution is known on every vertex"""
    return self.__fourier_complete


  @property
  def reference(self) -> Optional[QuiverPresentation]:
    return self.__reference


  @property
  def notes(self) -> Tuple[str, ...]:
    return self.__notes


  @property
  def zero_orbit(self) -> Orbit:
    return self.__orbits[0]


  @property
  def open_orbit(self) -> Orbit:
    return self.__orbits[-1]


  def orbit(self, label: object) -> Orbit:
    """
    @brief Looks up an orbit
    @raises AtlasError  Raised if the label is not an orbit of the case
    """
    key = normalize_label(label)
    if key not in self.__orbit_map:
      raise AtlasError(f"Inadmissible orbit label! ({key} not in {list(self.__orbit_map)})")
    return self.__orbit_map[key]


  def vertex_orbit(self, vertex: str) -> Orbit:
    """
    @brief The orbit supporting a simple
    @raises AtlasError  Raised for unknown vertices
    """
    return self.__orbit_map[self.local_system(vertex)[0]]


  def local_system(self, vertex: str) -> Tuple[str, str]:
    """
    @brief The (orbit, local system) label of a vertex
    @raises AtlasError  Raised for unknown vertices
    """
    vertex = normalize_label(vertex)
    if vertex not in self.__vertex_labels:
      raise AtlasError(f"Unknown vertex! ({vertex} not in {list(self.__quiver.vertices)})")
    return self.__vertex_labels[vertex]


  def is_below(self, first: object, second: object) -> bool:
    """Whether the first orbit lies in the closure of the second"""
    lower, upper = self.orbit(first).label, self.orbit(second).label
    reached, stack = {lower}, [lower]
    while stack:
      current = stack.pop()
      for a, b in self.__covers:
        if a == current and b not in reached:
          reached.add(b)
          stack.append(b)
    return upper in reached


  def isolated_vertices(self) -> List[str]:
    """Vertices without arrows, in vertex order"""
    touched = {a.tail for a in self.__quiver.arrows} | {a.head for a in self.__quiver.arrows}
    return [v for v in self.__quiver.vertices if v not in touched]


  def to_text(self) -> str:
    """Stable human readable rendering"""
    lines = [f"case: {self.__case_id}", f"dim X: {self.__dim_space}", "orbits:"]
    for o in self.__orbits:
      lines.append(f"  {o.label:<8} codim {o.codim:>3}  component group {o.component_group}")
    lines.append("vertices: " + " ".join(self.__quiver.vertices))
    lines.append("arrows:")
    for a in self.__quiver.arrows:
      lines.append(f"  {a.tail} -> {a.head}")
    lines.append("relations:")
    for r in self.__quiver.relations:
      heads = [self.__quiver.quiver.arrow(a).head for a in r.arrows]
      lines.append("  " + " -> ".join([r.source] + heads) + " = 0")
    if self.__semi_invariant is None:
      lines.append("semi-invariant: none")
    else:
      roots = ", ".join(str(r) for r in self.__semi_invariant.roots)
      lines.append(f"semi-invariant: degree {self.__semi_invariant.degree}, roots {roots}")
    if self.__fourier is None:
      lines.append("fourier: not stored")
    else:
      pairs = sorted({tuple(sorted((v, w))) for v, w in self.__fourier.items()})
      kind  = "complete" if self.__fourier_complete else "partial"
      lines.append(f"fourier ({kind}): " + ", ".join(v if v == w else f"{v}<->{w}" for v, w in pairs))
    return "\n".join(lines)


  def to_dict(self) -> Dict[str, Any]:
    """The quiver file schema extended by the atlas fields"""
    data = presentation_to_dict(self.__quiver)
    data.update({
      "case"             : {"family": self.__case_id.family, "n": self.__case_id.n, "m": self.__case_id.m},
      "dim_space"        : self.__dim_space,
      "orbits"           : [{"label": o.label, "codim": o.codim, "component_group": o.component_group}
                            for o in self.__orbits],
      "covers"           : [list(pair) for pair in self.__covers],
      "vertex_labels"    : {v: list(label) for v, label in self.__vertex_labels.items()},
      "semi_invariant"   : None if self.__semi_invariant is None else {
        "degree" : self.__semi_invariant.degree,
        "roots"  : [str(r) for r in self.__semi_invariant.roots]
      },
      "fourier"          : self.fourier,
      "fourier_complete" : self.__fourier_complete,
      "notes"            : list(self.__notes)
    })
    return data

"""
@package quiverpy.atlas.queries
@brief Queries against the atlas records
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, Mapping, Optional

from ..exceptions import AtlasError
from .CaseId import CaseId
from .CaseRecord import CaseRecord, normalize_label
from .families import get_case


__all__ = ["CharacteristicCycle", "orbit_codim", "fourier_permutation", "pyasetskii", "characteristic_cycle",
           "projective_cover_dims"]


class CharacteristicCycle:
  """
  @brief Characteristic cycle of a simple
  @details Every characteristic cycle in the atlas is multiplicity-free. When the cycle is known, `components` maps
  each orbit whose conormal closure occurs to its multiplicity. Otherwise `components` lists the conormals known to
  occur, and there may be more.
  """

  def __init__(self, vertex: str, known: bool, components: Mapping[str, int]) -> None:
    self.__vertex     = vertex
    self.__known      = known
    self.__components = dict(components)


  def __str__(self) -> str:
    """Simple string representation"""
    cycle = " + ".join(f"[T*_{o} X]" if k == 1 else f"{k}[T*_{o} X]" for o, k in self.__components.items())
    if self.__known:
      return cycle
    if cycle:
      return f"multiplicity-free, components undetermined (contains {cycle})"
    return "multiplicity-free, components undetermined"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"CharacteristicCycle({self.__vertex!r}, known={self.__known}, components={self.__components})"


  @property
  def vertex(self) -> str:
    return self.__vertex


  @property
  def known(self) -> bool:
    """Whether the components are determined"""
    return self.__known


  @property
  def multiplicity_free(self) -> bool:
    return True


  @property
  def components(self) -> Dict[str, int]:
    """Orbit labels of the conormal components with their multiplicities"""
    return dict(self.__components)


def orbit_codim(case_id: CaseId, label: object) -> int:
  """
  @brief Codimension of an orbit
  @param case_id     The case
  @param label       Orbit label: '(r,s)', '(i)', a pair or an integer
  @raises AtlasError  Raised for inadmissible labels
  @returns           The codimension
  """
  return get_case(case_id).orbit(label).codim


def fourier_permutation(case_id: CaseId) -> Optional[Dict[str, str]]:
  """
  @brief The vertex involution induced by the Fourier transform
  @details The map may be partial, see CaseRecord.fourier_complete
  @returns  Map from vertices to vertices, None where nothing is stored
  """
  return get_case(case_id).fourier


def pyasetskii(case_id: CaseId) -> Optional[Dict[str, str]]:
  """
  @brief The Pyasetskii pairing of orbits
  @details Obtained from the Fourier involution by forgetting the local systems
  @returns  Map from orbit labels to orbit labels, None where no Fourier data is stored
  """
  record = get_case(case_id)
  fourier = record.fourier
  if fourier is None:
    return None
  pairing = {}
  for v, w in fourier.items():
    source, target = record.vertex_orbit(v).label, record.vertex_orbit(w).label
    assert pairing.get(source, target) == target, \
      f"Fourier data does not descend to orbits! ({source} -> {pairing.get(source)} != {target})"
    pairing[source] = target
  return pairing


def _vertex(record: CaseRecord, vertex: object) -> str:
  vertex = normalize_label(vertex)
  if vertex not in record.quiver.vertices:
    raise AtlasError(f"Unknown vertex! ({vertex} not in {list(record.quiver.vertices)})")
  return vertex


def characteristic_cycle(case_id: CaseId, vertex: object) -> CharacteristicCycle:
  """
  @brief Characteristic cycle of the simple at a vertex
  @details Known for every simple of Sp_2n x GL_3 with n >= 3, where it is the conormal of the supporting orbit.
  Elsewhere the delta module at the origin is known to contain the zero fiber and the structure sheaf the zero
  section, each with multiplicity one.
  @param case_id     The case
  @param vertex      The vertex
  @raises AtlasError  Raised for unknown vertices
  @returns           The characteristic cycle
  """
  record = get_case(case_id)
  vertex = _vertex(record, vertex)
  orbit, system = record.local_system(vertex)

  if case_id.family == "sp2n_gl3" and case_id.n >= 3:
    return CharacteristicCycle(vertex, True, {orbit: 1})
  if orbit == record.zero_orbit.label or (orbit == record.open_orbit.label and system == "trivial"):
    return CharacteristicCycle(vertex, False, {orbit: 1})
  return CharacteristicCycle(vertex, False, {})


def projective_cover_dims(case_id: CaseId, vertex: object) -> Dict[str, int]:
  """
  @brief Dimension vector of the projective cover of a simple
  @details Entry y counts the nonzero paths from the vertex to y, the row of the Cartan matrix
  @raises AtlasError  Raised for unknown vertices
  """
  record = get_case(case_id)
  vertex = _vertex(record, vertex)
  C = record.quiver.cartan_matrix()
  row = C[record.quiver.quiver.index(vertex)]
  return {v: int(row[k]) for k, v in enumerate(record.quiver.vertices)}

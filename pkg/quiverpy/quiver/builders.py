"""
@package quiverpy.quiver.builders
@brief Builders for the quiver shapes of the equivariant D-module atlas
@details Chain quivers come with arrows in both directions between neighbouring vertices. In the AA shapes every
2-cycle is zero, in the AA^c shapes every composition of two arrows is zero.
@date 2026-10-16
"""
from typing import List, Sequence

from ..exceptions import QuiverError
from .Quiver import Quiver
from .QuiverPresentation import QuiverPresentation


__all__ = ["make_AA", "make_AA3c", "make_EE6", "make_B8", "make_B8_opposite", "make_chain", "make_chain_c",
           "builtin_presentation"]


def _label(k: int) -> str:
  return f"({k})"


def _doubled_chain(vertices: Sequence[str], right: Sequence[str], left: Sequence[str]) -> Quiver:
  """Arrows right[i]: v_i -> v_{i+1} and left[i]: v_{i+1} -> v_i"""
  arrows = []
  for i in range(len(vertices) - 1):
    arrows.append((right[i], vertices[i], vertices[i + 1]))
    arrows.append((left[i], vertices[i + 1], vertices[i]))
  return Quiver(vertices, arrows)


def _two_cycles(right: Sequence[str], left: Sequence[str]) -> List[List[str]]:
  relations = []
  for a, b in zip(right, left):
    relations.append([a, b])
    relations.append([b, a])
  return relations


def _all_compositions(quiver: Quiver) -> List[List[str]]:
  return [[a.id, b.id] for a in quiver.arrows for b in quiver.arrows if a.head == b.tail]


def make_AA(n: int) -> QuiverPresentation:
  """
  @brief The quiver AA_n: a chain (1), ..., (n) with arrows alpha_i: (i) -> (i+1) and beta_i: (i+1) -> (i)
  @details All 2-cycles alpha_i beta_i and beta_i alpha_i are zero. AA_1 is a single vertex
  @param n            Number of vertices
  @raises QuiverError  Raised if n < 1
  @returns            The presentation
  """
  if n < 1:
    raise QuiverError(f"The chain needs at least one vertex! ({n} < 1)")
  right = [f"alpha{i}" for i in range(1, n)]
  left  = [f"beta{i}" for i in range(1, n)]
  quiver = _doubled_chain([_label(k) for k in range(1, n + 1)], right, left)
  return QuiverPresentation(quiver, _two_cycles(right, left))


def make_AA3c() -> QuiverPresentation:
  """The quiver AA_3^c: the shape of AA_3 with every composition of two arrows zero"""
  right, left = ["alpha1", "alpha2"], ["beta1", "beta2"]
  quiver = _doubled_chain([_label(k) for k in (1, 2, 3)], right, left)
  return QuiverPresentation(quiver, _all_compositions(quiver))


def make_chain(vertices: Sequence[object]) -> QuiverPresentation:
  """
  @brief AA_k on arbitrary vertex labels
  @details Arrow ids are '<tail>-><head>', all 2-cycles are zero
  """
  vertices = [str(v) for v in vertices]
  right = [f"{vertices[i]}->{vertices[i + 1]}" for i in range(len(vertices) - 1)]
  left  = [f"{vertices[i + 1]}->{vertices[i]}" for i in range(len(vertices) - 1)]
  return QuiverPresentation(_doubled_chain(vertices, right, left), _two_cycles(right, left))


def make_chain_c(vertices: Sequence[object]) -> QuiverPresentation:
  """AA_k^c on arbitrary vertex labels: every composition of two arrows is zero"""
  chain = make_chain(vertices)
  return QuiverPresentation(chain.quiver, _all_compositions(chain.quiver))


def make_EE6() -> QuiverPresentation:
  """
  @brief The quiver EE_6
  @details A doubled chain (1), ..., (5) with alpha_i, beta_i as in AA_5 and the pair alpha: (6) -> (3),
  beta: (3) -> (6). All 2-cycles of the chain are zero and so is every composition of two arrows in which alpha or
  beta takes part.
  """
  right = [f"alpha{i}" for i in range(1, 5)]
  left  = [f"beta{i}" for i in range(1, 5)]
  chain = _doubled_chain([_label(k) for k in range(1, 6)], right, left)
  quiver = Quiver(chain.vertices + (_label(6),),
                  [tuple(a) for a in chain.arrows] + [("alpha", "(6)", "(3)"), ("beta", "(3)", "(6)")])

  relations = _two_cycles(right, left)
  for first, second in _all_compositions(quiver):
    if first in ("alpha", "beta") or second in ("alpha", "beta"):
      relations.append([first, second])
  return QuiverPresentation(quiver, relations)


_B8_ARROWS = [("a21", "(2)", "(1)"), ("a32", "(3)", "(2)"), ("a36", "(3)", "(6)"), ("a34", "(3)", "(4)"),
              ("a45", "(4)", "(5)"), ("a72", "(7)", "(2)"), ("a84", "(8)", "(4)")]


def make_B8() -> QuiverPresentation:
  """
  @brief The quiver B_8 obtained from EE_6 by splitting nodes
  @details Arrows (2)->(1), (3)->(2), (3)->(6), (3)->(4), (4)->(5), (7)->(2), (8)->(4). The compositions
  (7)->(2)->(1) and (8)->(4)->(5) are zero.
  """
  quiver = Quiver([_label(k) for k in range(1, 9)], _B8_ARROWS)
  return QuiverPresentation(quiver, [["a72", "a21"], ["a84", "a45"]])


def make_B8_opposite() -> QuiverPresentation:
  """The opposite of B_8"""
  return make_B8().opposite()


# Map from builtin names to their builders
_builtin_map = {
  "AA3c" : make_AA3c,
  "EE6"  : make_EE6,
  "B8"   : make_B8,
  "B8op" : make_B8_opposite
}


def builtin_presentation(name: str) -> QuiverPresentation:
  """
  @brief Looks up a builtin presentation by name
  @param name         'AA:<n>' or one of 'AA3c', 'EE6', 'B8', 'B8op'
  @raises QuiverError  Raised for unknown names
  @returns            The presentation
  """
  if name.startswith("AA:"):
    try:
      n = int(name[3:])
    except ValueError:
      raise QuiverError(f"Invalid chain length! ({name!r})")
    return make_AA(n)
  if name not in _builtin_map:
    raise QuiverError(f"Unknown builtin quiver! ({name!r} not in {['AA:<n>'] + list(_builtin_map.keys())})")
  return _builtin_map[name]()

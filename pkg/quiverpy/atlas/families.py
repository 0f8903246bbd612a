"""
@package quiverpy.atlas.families
@brief The atlas dataset: one builder per family of irreducible spherical vector spaces
@details Codimensions are computed from closed formulas, quivers are assembled from the chain and EE_6 builders with
the orbit labels as vertex names. The sign local system on an orbit (i) is written (i)'.
@date 2026-10-16
"""
from typing import Dict, List, Optional, Sequence, Tuple
from fractions import Fraction
from functools import lru_cache
from math import comb
import logging

from ..exceptions import AtlasError
from ..quiver.Quiver import Quiver
from ..quiver.QuiverPresentation import QuiverPresentation
from ..quiver.builders import make_AA, make_AA3c, make_EE6, make_chain, make_chain_c
from .CaseId import CaseId, CaseTemplate, FAMILIES
from .CaseRecord import CaseRecord, Orbit, SemiInvariant


__all__ = ["list_cases", "get_case", "sp_gl_labels", "sp_gl_codim"]


logger = logging.getLogger(__name__)


def _label(*index: int) -> str:
  return "(" + ",".join(str(i) for i in index) + ")"


def _sign(label: str) -> str:
  return label + "'"


def _union(parts: Sequence[QuiverPresentation]) -> QuiverPresentation:
  result = parts[0]
  for part in parts[1:]:
    result = result.disjoint_union(part)
  return result


def _quiver(chains: Sequence[Sequence[str]], isolated: Sequence[str], order: Sequence[str],
            complete: bool = False) -> QuiverPresentation:
  """Chains with zero 2-cycles (or zero compositions) plus isolated vertices, vertices listed in `order`"""
  builder = make_chain_c if complete else make_chain
  parts   = [builder(chain) for chain in chains if len(chain) > 0]
  if isolated:
    parts.append(QuiverPresentation.isolated(isolated))
  union = _union(parts)
  assert sorted(union.vertices) == sorted(order), f"Vertex sets differ! ({sorted(union.vertices)} != {sorted(order)})"
  return _reorder(union, order)


def _reorder(pres: QuiverPresentation, order: Sequence[str]) -> QuiverPresentation:
  quiver = Quiver(order, [tuple(a) for a in pres.arrows])
  return QuiverPresentation(quiver, [r.arrows for r in pres.relations])


def _linear_covers(labels: Sequence[str]) -> List[Tuple[str, str]]:
  return [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)]


def _roots(values: Sequence[object]) -> Tuple[Fraction, ...]:
  return tuple(sorted({Fraction(v) for v in values}, reverse=True))


def _trivial_labels(orbits: Sequence[Orbit]) -> Dict[str, Tuple[str, str]]:
  labels = {}
  for o in orbits:
    labels[o.label] = (o.label, "trivial")
    if o.component_group == 2:
      labels[_sign(o.label)] = (o.label, "sign")
  return labels


def _vertex_order(orbits: Sequence[Orbit]) -> List[str]:
  return list(_trivial_labels(orbits).keys())


def _shift(labels: Sequence[str], pres: QuiverPresentation) -> Dict[str, str]:
  """Vertex relabeling map from the builder labels (1), (2), ... onto `labels`"""
  return {v: labels[k] for k, v in enumerate(pres.vertices)}


def _gl_m_gl_n(case: CaseId) -> CaseRecord:
  m, n   = case.m, case.n
  k      = min(m, n)
  orbits = [Orbit(_label(i), (m - i) * (n - i), 1) for i in range(k + 1)]
  order  = _vertex_order(orbits)
  covers = _linear_covers([o.label for o in orbits])
  notes  = ["orbits: matrices of rank i, codimension (m - i)(n - i)"]

  if m == n:
    quiver = _quiver([order], [], order)
    notes += [f"quiver: equivalent to representations of AA_{n + 1}",
              f"roots: determinant of degree {n}, b-function roots -1, ..., -{n}",
              "fourier: the transform of C[X] is the localisation L_f^-n, forcing the chain reversal (k) <-> (n - k)"]
    return CaseRecord(case, m * n, orbits, covers, quiver, _trivial_labels(orbits),
                      semi_invariant=SemiInvariant(n, _roots(range(-n, 0))),
                      fourier={_label(i): _label(n - i) for i in range(n + 1)}, fourier_complete=True,
                      reference=make_AA(n + 1), notes=notes)

  quiver = _quiver([], order, order)
  notes += ["quiver: semisimple category, every simple isolated",
            "fourier: zero orbit <-> open orbit only, the middle orbits are undetermined"]
  return CaseRecord(case, m * n, orbits, covers, quiver, _trivial_labels(orbits),
                    fourier={_label(0): _label(k), _label(k): _label(0)}, notes=notes)


def _skew(case: CaseId) -> CaseRecord:
  n      = case.n
  r      = n // 2
  orbits = [Orbit(_label(i), comb(n - 2 * i, 2), 1) for i in range(r + 1)]
  order  = _vertex_order(orbits)
  covers = _linear_covers(order)
  notes  = ["orbits: skew matrices of rank 2i, codimension C(n - 2i, 2)"]

  if n % 2 == 0:
    quiver = _quiver([order], [], order)
    notes += [f"quiver: AA_{r + 1} on the orbits", f"roots: Pfaffian of degree {r}, roots -1, -3, ..., -{n - 1}"]
    return CaseRecord(case, comb(n, 2), orbits, covers, quiver, _trivial_labels(orbits),
                      semi_invariant=SemiInvariant(r, _roots(range(-(n - 1), 0, 2))), reference=make_AA(r + 1),
                      notes=notes)

  notes += ["quiver: semisimple for odd n, every simple isolated"]
  return CaseRecord(case, comb(n, 2), orbits, covers, _quiver([], order, order), _trivial_labels(orbits), notes=notes)


def _symmetric(case: CaseId) -> CaseRecord:
  n      = case.n
  eps    = n % 2
  orbits = [Orbit(_label(i), comb(n - i + 1, 2), 1 if i == 0 else 2) for i in range(n + 1)]
  order  = _vertex_order(orbits)

  first  = [_label(i) for i in range(1 - eps, n, 2)] + [_label(n)]
  second = [_label(i) if i == 0 else _sign(_label(i)) for i in range(eps, n - 1, 2)] + [_sign(_label(n))]
  used   = set(first) | set(second)
  quiver = _quiver([first, second], [v for v in order if v not in used], order)

  notes = ["orbits: symmetric matrices of rank i, codimension C(n - i + 1, 2), component group Z/2 for i > 0",
           f"quiver: two AA chains with parity {eps}, the remaining {n - 1} simples isolated",
           f"roots: determinant of degree {n}, roots -1, -3/2, ..., -{Fraction(n + 1, 2)}",
           "fourier: the transform of C[X] is L_f^-(n+1)/2, only the endpoint pair is stored"]
  return CaseRecord(case, comb(n + 1, 2), orbits, _linear_covers([o.label for o in orbits]), quiver,
                    _trivial_labels(orbits),
                    semi_invariant=SemiInvariant(n, _roots([Fraction(-(k + 1), 2) for k in range(1, n + 1)])),
                    fourier={_label(n): _label(0), _label(0): _label(n)}, notes=notes)


def sp_gl_labels(n: int, m: int) -> List[Tuple[int, int]]:
  """
  @brief Orbits of Sp_2n x GL_m on 2n x m matrices
  @details An orbit is fixed by the rank r of x and the rank s of the restricted form x^T J x. The pair is admissible
  iff r <= min(m, 2n), s is even and max(0, 2r - 2n) <= s <= r.
  """
  return [(r, s) for r in range(min(m, 2 * n) + 1) for s in range(0, r + 1, 2) if s >= max(0, 2 * r - 2 * n)]


def sp_gl_codim(n: int, m: int, r: int, s: int) -> int:
  """Codimension (2n - r)(m - r) + (r - s)(r - s - 1)/2 of the orbit (r, s)"""
  if (r, s) not in sp_gl_labels(n, m):
    raise AtlasError(f"Inadmissible orbit label! ({_label(r, s)} for Sp_{2 * n} x GL_{m})")
  return (2 * n - r) * (m - r) + (r - s) * (r - s - 1) // 2


def _sp_gl_base(n: int, m: int) -> Tuple[List[Orbit], List[Tuple[str, str]], Optional[SemiInvariant]]:
  labels = sp_gl_labels(n, m)
  orbits = sorted((Orbit(_label(r, s), sp_gl_codim(n, m, r, s), 1) for r, s in labels), key=lambda o: -o.codim)

  below = lambda a, b: a != b and a[0] <= b[0] and a[1] <= b[1]
  covers = [(_label(*a), _label(*b)) for a in labels for b in labels
            if below(a, b) and not any(below(a, c) and below(c, b) for c in labels)]

  semi = None
  if m <= 2 * n and m % 2 == 0:
    semi = SemiInvariant(m, _roots(list(range(-(m - 1), 0, 2)) + list(range(-2 * n, -2 * n + m - 1, 2))))
  return orbits, covers, semi


_SP_NOTE = "orbits: pairs (r, s) of the rank of x and of x^T J x, codimension (2n - r)(m - r) + (r - s)(r - s - 1)/2"


def _sp2n_gl2(case: CaseId) -> CaseRecord:
  n = case.n
  orbits, covers, semi = _sp_gl_base(n, 2)
  order  = _vertex_order(orbits)
  quiver = _quiver([["(0,0)", "(2,0)", "(2,2)"]], ["(1,0)"], order)
  notes  = [_SP_NOTE, "quiver: AA_3 on (0,0), (2,0), (2,2) with every 2-cycle zero, (1,0) isolated",
            f"roots: semi-invariant of degree 2 with roots -1, -{2 * n}"]
  return CaseRecord(case, 4 * n, orbits, covers, quiver, _trivial_labels(orbits), semi_invariant=semi,
                    reference=make_AA(3), notes=notes)


def _sp2n_gl3(case: CaseId) -> CaseRecord:
  n = case.n
  orbits, covers, semi = _sp_gl_base(n, 3)
  order = _vertex_order(orbits)

  if n == 2:
    quiver = _quiver([["(1,0)", "(2,0)", "(2,2)"]], ["(3,2)", "(0,0)"], order, complete=True)
    notes  = [_SP_NOTE,
              "quiver: AA_3^c on (1,0), (2,0), (2,2), all compositions zero since P_(2,2) has length two",
              "fourier: (3,2) <-> (0,0), (2,2) <-> (1,0), (2,0) fixed"]
    fourier = {"(3,2)": "(0,0)", "(0,0)": "(3,2)", "(2,2)": "(1,0)", "(1,0)": "(2,2)", "(2,0)": "(2,0)"}
    return CaseRecord(case, 6 * n, orbits, covers, quiver, _trivial_labels(orbits), semi_invariant=semi,
                      fourier=fourier, fourier_complete=True, reference=make_AA3c(), notes=notes)

  quiver = _quiver([["(1,0)", "(3,0)"], ["(2,0)", "(2,2)"]], ["(3,2)", "(0,0)"], order)
  notes  = [_SP_NOTE, "codimensions: 6n, 4n - 2, 2n - 1, 2n - 2, 3, 0",
            "quiver: AA_2 on (1,0), (3,0) and AA_2 on (2,0), (2,2), the rest isolated",
            "fourier: (3,2) <-> (0,0), (2,2) <-> (1,0), (3,0) <-> (2,0)",
            "characteristic cycles: every simple has the conormal of its orbit as characteristic cycle"]
  fourier = {"(3,2)": "(0,0)", "(2,2)": "(1,0)", "(3,0)": "(2,0)"}
  fourier.update({w: v for v, w in list(fourier.items())})
  return CaseRecord(case, 6 * n, orbits, covers, quiver, _trivial_labels(orbits), semi_invariant=semi,
                    fourier=fourier, fourier_complete=True, notes=notes)


def _sp4_glm(case: CaseId) -> CaseRecord:
  m = case.m
  orbits, covers, semi = _sp_gl_base(2, m)
  order  = _vertex_order(orbits)
  quiver = _quiver([["(2,0)", "(2,2)"]], [v for v in order if v not in ("(2,0)", "(2,2)")], order)
  notes  = [_SP_NOTE, "codimensions: 4m, 3m - 3, 2m - 3, 2m - 4, m - 3, 0",
            "quiver: AA_2 on (2,0), (2,2), four simples isolated"]
  return CaseRecord(case, 4 * m, orbits, covers, quiver, _trivial_labels(orbits), semi_invariant=semi,
                    reference=make_AA(2), notes=notes)


# Vertices of EE_6 in builder order (1), ..., (6)
_EE6_LABELS = ["(0,0)", "(1,0)", "(2,2)", "(3,2)", "(4,4)", "(2,0)"]


def _sp4_gl4(case: CaseId) -> CaseRecord:
  orbits, covers, semi = _sp_gl_base(2, 4)
  order = _vertex_order(orbits)
  ee6   = make_EE6()
  quiver = _reorder(ee6.relabel(_shift(_EE6_LABELS, ee6)), order)
  notes = [_SP_NOTE, "quiver: EE_6 with (2,0) at the top vertex attached to (2,2)",
           "roots: semi-invariant of degree 4 with roots -1, -2, -3, -4"]
  return CaseRecord(case, 16, orbits, covers, quiver, _trivial_labels(orbits), semi_invariant=semi,
                    reference=ee6, notes=notes)


def _sp_2n(case: CaseId) -> CaseRecord:
  n      = case.n
  orbits = [Orbit("(0)", 2 * n, 1), Orbit("(1)", 0, 1)]
  order  = _vertex_order(orbits)
  notes  = ["quiver: two isolated simples",
            "fourier: the delta module at the origin and the structure sheaf are exchanged"]
  return CaseRecord(case, 2 * n, orbits, _linear_covers(order), _quiver([], order, order), _trivial_labels(orbits),
                    fourier={"(0)": "(1)", "(1)": "(0)"}, fourier_complete=True, notes=notes)


def _spin10(case: CaseId) -> CaseRecord:
  orbits = [Orbit("(0)", 16, 1), Orbit("(1)", 5, 1), Orbit("(2)", 0, 1)]
  order  = _vertex_order(orbits)
  return CaseRecord(case, 16, orbits, _linear_covers(order), _quiver([], order, order), _trivial_labels(orbits),
                    notes=["quiver: three isolated simples"])


def _orthogonal_shape(case: CaseId, dim: int, roots: Sequence[Fraction], notes: List[str]) -> CaseRecord:
  """Zero orbit, the punctured null cone and the open orbit with component group Z/2"""
  orbits = [Orbit("(0)", dim, 1), Orbit("(1)", 1, 1), Orbit("(2)", 0, 2)]
  order  = _vertex_order(orbits)
  if dim % 2 == 0:
    quiver = _quiver([["(0)", "(1)", "(2)"]], ["(2)'"], order)
    reference = make_AA(3)
    notes = notes + ["quiver: AA_3 on (0), (1), (2), the sign simple (2)' isolated"]
  else:
    quiver = _quiver([["(1)", "(2)"], ["(0)", "(2)'"]], [], order)
    reference = None
    notes = notes + ["quiver: AA_2 on (1), (2) and AA_2 on (0), (2)'"]
  return CaseRecord(case, dim, orbits, _linear_covers([o.label for o in orbits]), quiver, _trivial_labels(orbits),
                    semi_invariant=SemiInvariant(2, _roots(roots)), reference=reference, notes=notes)


def _so_n(case: CaseId) -> CaseRecord:
  n = case.n
  return _orthogonal_shape(case, n, [-1, Fraction(-n, 2)],
                           [f"roots: quadratic form with b-function roots -1, -{Fraction(n, 2)}"])


def _spin7(case: CaseId) -> CaseRecord:
  return _orthogonal_shape(case, 8, [-1, -4], ["roots: derived from the shared shape with SO_8"])


def _g2(case: CaseId) -> CaseRecord:
  return _orthogonal_shape(case, 7, [-1, Fraction(-7, 2)], ["roots: derived from the shared shape with SO_7"])


def _spin9(case: CaseId) -> CaseRecord:
  orbits = [Orbit("(0)", 16, 1), Orbit("(1)", 5, 1), Orbit("(2)", 1, 1), Orbit("(3)", 0, 2)]
  order  = _vertex_order(orbits)
  quiver = _quiver([["(0)", "(2)", "(3)"]], ["(1)", "(3)'"], order)
  notes  = ["quiver: AA_3 on (0), (2), (3), the simples (1) and (3)' isolated",
            "roots: derived from the quadratic semi-invariant on C^16"]
  return CaseRecord(case, 16, orbits, _linear_covers([o.label for o in orbits]), quiver, _trivial_labels(orbits),
                    semi_invariant=SemiInvariant(2, _roots([-1, -8])), reference=make_AA(3), notes=notes)


def _e6(case: CaseId) -> CaseRecord:
  orbits = [Orbit("(0)", 27, 1), Orbit("(1)", 10, 1), Orbit("(2)", 1, 1), Orbit("(3)", 0, 1)]
  order  = _vertex_order(orbits)
  notes  = ["quiver: AA_4 with every 2-cycle zero", "roots: cubic semi-invariant with roots -1, -5, -9"]
  return CaseRecord(case, 27, orbits, _linear_covers(order), _quiver([order], [], order), _trivial_labels(orbits),
                    semi_invariant=SemiInvariant(3, _roots([-1, -5, -9])), reference=make_AA(4), notes=notes)


# Map from family tags to their record builders
_builder_map = {
  "gl_m_gl_n" : _gl_m_gl_n,
  "skew"      : _skew,
  "symmetric" : _symmetric,
  "sp2n_gl2"  : _sp2n_gl2,
  "sp2n_gl3"  : _sp2n_gl3,
  "sp4_glm"   : _sp4_glm,
  "sp4_gl4"   : _sp4_gl4,
  "sp_2n"     : _sp_2n,
  "spin10"    : _spin10,
  "so_n"      : _so_n,
  "spin7"     : _spin7,
  "spin9"     : _spin9,
  "g2"        : _g2,
  "e6"        : _e6
}


def list_cases() -> List[CaseTemplate]:
  """The family templates of the atlas, with their parameter constraints"""
  return [CaseId.template_of(family) for family in FAMILIES]


@lru_cache(maxsize=None)
def get_case(case_id: CaseId) -> CaseRecord:
  """
  @brief The record of a case
  @param case_id     The case, already validated by CaseId
  @raises AtlasError  Raised if the case is unknown
  @returns           The fully populated record
  """
  if not isinstance(case_id, CaseId):
    raise AtlasError(f"Expected a CaseId! (got {type(case_id).__name__})")
  record = _builder_map[case_id.family](case_id)
  logger.debug("Built atlas record %s", record)
  return record

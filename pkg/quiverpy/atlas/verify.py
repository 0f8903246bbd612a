"""
@package quiverpy.atlas.verify
@brief Consistency checks on the atlas records
@details Failing checks are reported, never raised.
@date 2026-10-16
"""
from __future__ import annotations
from typing import Any, Dict, Iterable, List, NamedTuple, Sequence
import logging

from ..quiver.QuiverPresentation import QuiverPresentation
from .CaseId import CaseId, FAMILIES
from .CaseRecord import CaseRecord
from .families import get_case


__all__ = ["InvariantCheck", "InvariantReport", "verify_case_invariants", "verify_atlas_grid", "grid_cases"]


logger = logging.getLogger(__name__)


class InvariantCheck(NamedTuple):
  name: str
  passed: bool
  note: str


class InvariantReport:
  """Pass or fail per invariant of one case"""

  def __init__(self, case_id: CaseId, checks: Sequence[InvariantCheck]) -> None:
    self.__case_id = case_id
    self.__checks  = tuple(checks)


  def __bool__(self) -> bool:
    return self.passed


  def __str__(self) -> str:
    """Simple string representation"""
    status = "PASS" if self.passed else "FAIL"
    return f"{self.__case_id}: {status} ({sum(c.passed for c in self.__checks)}/{len(self.__checks)})"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return self.to_text()


  @property
  def case_id(self) -> CaseId:
    return self.__case_id


  @property
  def checks(self) -> tuple:
    return self.__checks


  @property
  def passed(self) -> bool:
    """Whether every invariant holds"""
    return all(c.passed for c in self.__checks)


  @property
  def failures(self) -> List[InvariantCheck]:
    return [c for c in self.__checks if not c.passed]


  def to_text(self) -> str:
    lines = [str(self)]
    for c in self.__checks:
      lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}: {c.note}")
    return "\n".join(lines)


  def to_dict(self) -> Dict[str, Any]:
    return {
      "case"   : str(self.__case_id),
      "passed" : self.passed,
      "checks" : [{"name": c.name, "passed": c.passed, "note": c.note} for c in self.__checks]
    }


def _vertex_count(record: CaseRecord) -> InvariantCheck:
  expected = sum(o.component_group for o in record.orbits)
  found    = len(record.quiver.vertices)
  per_orbit = all(sum(1 for label in record.vertex_labels.values() if label[0] == o.label) == o.component_group
                  for o in record.orbits)
  return InvariantCheck("vertex_count", found == expected and per_orbit,
                        f"{found} simples, {expected} irreducible local systems on the orbits")


def _cartan(record: CaseRecord) -> InvariantCheck:
  C = record.quiver.cartan_matrix()
  return InvariantCheck("cartan_at_most_one", bool((C <= 1).all()), f"largest Cartan entry {int(C.max())}")


def _self_opposite(record: CaseRecord) -> InvariantCheck:
  return InvariantCheck("self_opposite", record.quiver.is_self_opposite(), "duality is an anti-equivalence")


def _closure_order(record: CaseRecord) -> InvariantCheck:
  codim  = {o.label: o.codim for o in record.orbits}
  labels = set(codim)
  ok = all(a in labels and b in labels and codim[a] > codim[b] for a, b in record.covers)
  ok = ok and record.open_orbit.codim == 0 and record.zero_orbit.codim == record.dim_space
  ok = ok and all(record.is_below(record.zero_orbit.label, o.label) and record.is_below(o.label, record.open_orbit.label)
                  for o in record.orbits)
  return InvariantCheck("closure_order", ok,
                        f"codimension drops along covers from {record.dim_space} to 0")


def _roots(record: CaseRecord) -> InvariantCheck:
  semi = record.semi_invariant
  if semi is None:
    return InvariantCheck("root_count", True, "no semi-invariant")
  return InvariantCheck("root_count", len(set(semi.roots)) == semi.degree,
                        f"{len(set(semi.roots))} distinct roots, deg f = {semi.degree}")


def _fourier(record: CaseRecord) -> InvariantCheck:
  F = record.fourier
  if F is None:
    return InvariantCheck("fourier", True, "not stored")

  involutive = all(w in F and F[w] == v for v, w in F.items())
  if not record.fourier_complete:
    C = record.quiver.cartan_matrix()
    length = lambda v: int(C[record.quiver.quiver.index(v)].sum())
    ok = involutive and all(length(v) == length(w) for v, w in F.items())
    return InvariantCheck("fourier", ok, "partial involution preserving projective cover lengths")

  ok = involutive and set(F) == set(record.quiver.vertices) and record.quiver.is_automorphism(F)
  duality = record.quiver.find_isomorphism(record.quiver.opposite())
  if ok and duality is not None:
    D = duality[0]
    ok = all(D[F[v]] == F[D[v]] for v in record.quiver.vertices)
  return InvariantCheck("fourier", ok, "involutive automorphism commuting with duality")


def _reference(record: CaseRecord) -> InvariantCheck:
  if record.reference is None:
    return InvariantCheck("reference_shape", True, "no reference builder")
  extra = len(record.quiver.vertices) - len(record.reference.vertices)
  if extra < 0:
    return InvariantCheck("reference_shape", False, "fewer vertices than the reference")
  target = record.reference
  if extra > 0:
    target = target.disjoint_union(QuiverPresentation.isolated([f"isolated{k}" for k in range(extra)]))
  return InvariantCheck("reference_shape", record.quiver.is_isomorphic_to(target),
                        f"isomorphic to the builder shape plus {extra} isolated vertices")


def verify_case_invariants(case_id: CaseId) -> InvariantReport:
  """
  @brief Runs every consistency check on a case record
  @details The quiver is finite by construction. Checked are the vertex count against the local systems, Cartan
  entries at most one, self-duality, the closure order against the codimensions, the b-function root count against
  deg f, the Fourier involution and the builder shape.
  @param case_id  The case
  @returns        The report
  """
  record = get_case(case_id)
  checks = [InvariantCheck("finite", True, f"{len(record.quiver.nonzero_paths())} nonzero paths")]
  for check in (_vertex_count, _cartan, _self_opposite, _closure_order, _roots, _fourier, _reference):
    checks.append(check(record))
  report = InvariantReport(case_id, checks)
  logger.debug("%s", report)
  return report


def grid_cases(params: Iterable[int] = range(2, 7)) -> List[CaseId]:
  """Every case with its parameters drawn from `params` and in range, in family order"""
  params = list(params)
  cases  = []
  for family in FAMILIES:
    template = CaseId.template_of(family)
    if template.parameters == ():
      cases.append(CaseId(family))
    elif template.parameters == ("n",):
      cases += [CaseId(family, n=n) for n in params if n >= template.minimum["n"]]
    elif template.parameters == ("m",):
      cases += [CaseId(family, m=m) for m in params if m >= template.minimum["m"]]
    else:
      cases += [CaseId(family, n=n, m=m) for m in params for n in params
                if m >= template.minimum["m"] and n >= template.minimum["n"]]
  return cases


def verify_atlas_grid(params: Iterable[int] = range(2, 7)) -> List[InvariantReport]:
  """
  @brief Runs verify_case_invariants over the parameter grid
  @param params  Parameter values tried for every family
  @returns       One report per case
  """
  reports = [verify_case_invariants(case) for case in grid_cases(params)]
  logger.info("Atlas grid: %d of %d cases pass", sum(r.passed for r in reports), len(reports))
  return reports

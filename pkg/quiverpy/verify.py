"""
@package quiverpy.verify
@brief The verification suites behind `quiverpy verify`
@details Every suite returns a SuiteResult listing named checks. The suites are deterministic.
@date 2026-10-16
"""
from __future__ import annotations
from typing import Any, Callable, Dict, List, NamedTuple, Sequence
import logging
import random

from .atlas import CaseId, get_case, projective_cover_dims, verify_atlas_grid, fourier_permutation
from .math.Field import Field
from .moment import lemma_m2_check, rank_sweep, standard_actions
from .quiver.builders import make_AA, make_AA3c, make_B8, make_B8_opposite, make_EE6
from .rep.decompose import is_indecomposable
from .rep.hom import is_isomorphic
from .rep.strings import all_string_specs, classify_AA, string_module, weight_chain_rep
from .reptype.TitsForm import tits_form


__all__ = ["Check", "SuiteResult", "SUITES", "B8_TERMS", "B8_RADICAL", "run_suite", "run_all"]


logger = logging.getLogger(__name__)


class Check(NamedTuple):
  name: str
  passed: bool
  detail: str = ""


class SuiteResult:
  """Named checks of one suite"""

  def __init__(self, name: str, checks: Sequence[Check]) -> None:
    self.__name   = name
    self.__checks = tuple(checks)


  def __bool__(self) -> bool:
    return self.passed


  def __str__(self) -> str:
    """Simple string representation"""
    return f"{self.__name}: {'PASS' if self.passed else 'FAIL'} ({sum(c.passed for c in self.__checks)}/{len(self.__checks)})"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return self.to_text()


  @property
  def name(self) -> str:
    return self.__name


  @property
  def checks(self) -> tuple:
    return self.__checks


  @property
  def passed(self) -> bool:
    return all(c.passed for c in self.__checks)


  def to_text(self) -> str:
    lines = [str(self)]
    for c in self.__checks:
      lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else ""))
    return "\n".join(lines)


  def to_dict(self) -> Dict[str, Any]:
    return {"suite": self.__name, "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.__checks]}


def suite_quivers() -> SuiteResult:
  """Builder invariants"""
  checks = []
  for n in range(1, 7):
    pres = make_AA(n)
    C = pres.cartan_matrix()
    checks.append(Check(f"AA_{n}", bool((C == 1).all()) and pres.is_self_opposite(),
                        f"{len(pres.nonzero_paths())} nonzero paths, Cartan matrix all ones"))

  for name, pres in (("AA_3^c", make_AA3c()), ("EE_6", make_EE6())):
    C = pres.cartan_matrix()
    checks.append(Check(name, bool((C <= 1).all()) and pres.is_self_opposite(),
                        f"{len(pres.relations)} relations, Cartan entries at most one"))

  ee6 = make_EE6()
  checks.append(Check("EE_6 shape", len(ee6.arrows) == 10 and len(ee6.relations) == 14,
                      f"{len(ee6.arrows)} arrows, {len(ee6.relations)} relations"))
  checks.append(Check("B_8 opposite", make_B8_opposite().is_isomorphic_to(make_B8().opposite())
                      and not make_B8().is_self_opposite(), "B_8 is not self-opposite"))
  return SuiteResult("quivers", checks)


def suite_strings() -> SuiteResult:
  """String modules of AA_n, n <= 4, and the weight chain of the 2 x 2 determinant"""
  checks = []
  for n in range(1, 5):
    specs   = all_string_specs(n)
    modules = [string_module(spec) for spec in specs]
    expected = sum((n - l) * 2 ** l for l in range(n))
    valid   = all(M.validate().ok and is_indecomposable(M) for M in modules)
    distinct = all(not is_isomorphic(modules[a], modules[b])
                   for a in range(len(modules)) for b in range(a + 1, len(modules))
                   if modules[a].dim_vector == modules[b].dim_vector)
    checks.append(Check(f"strings of AA_{n}", len(specs) == expected and valid and distinct,
                        f"{len(specs)} pairwise non-isomorphic indecomposable strings"))

  specs = all_string_specs(3)
  total = string_module(specs[0])
  for spec in specs[1:4]:
    total = total + string_module(spec)
  checks.append(Check("classify direct sum", classify_AA(total) == sorted(specs[:4]),
                      " + ".join(str(s) for s in sorted(specs[:4]))))

  chain = weight_chain_rep([1, 1, 1], [1, 1], [0, 0])
  labels = classify_AA(chain)
  checks.append(Check("weight chain", [str(s) for s in labels] == ["I_{1,3}^{++}"],
                      " + ".join(str(s) for s in labels)))
  return SuiteResult("strings", checks)


# Coefficients of the Tits form of B_8, keyed by vertex pairs
B8_TERMS = {
  **{(f"({k})", f"({k})"): 1 for k in range(1, 9)},
  ("(1)", "(2)"): -1, ("(2)", "(3)"): -1, ("(3)", "(4)"): -1, ("(4)", "(5)"): -1,
  ("(3)", "(6)"): -1, ("(2)", "(7)"): -1, ("(4)", "(8)"): -1,
  ("(1)", "(7)"): 1, ("(5)", "(8)"): 1
}

B8_RADICAL = (1, 3, 4, 3, 1, 2, 1, 1)


def suite_tits(samples: int = 1000, seed: int = 0) -> SuiteResult:
  """The Tits form of B_8: coefficients, positive semi-definiteness, radical and sample values"""
  q = tits_form(make_B8())
  checks = [Check("coefficients", q.terms() == B8_TERMS, str(q)),
            Check("psd", q.is_psd()),
            Check("radical", q.radical_lattice() == [B8_RADICAL], f"{q.radical_lattice()}"),
            Check("radical value", q(B8_RADICAL) == 0),
            Check("radical multiples", all(q([k * r for r in B8_RADICAL]) == 0 for k in range(-3, 4)),
                  "q(k r) = 0 for k in -3..3")]

  rng, positive, tried = random.Random(seed), True, 0
  while tried < samples:
    x = [rng.randint(-3, 3) for _ in range(8)]
    if any(x[k] * B8_RADICAL[0] != x[0] * B8_RADICAL[k] for k in range(8)):
      tried += 1
      positive = positive and q(x) > 0
  checks.append(Check("off-radical values", positive, f"q > 0 on {samples} vectors off the radical line"))
  return SuiteResult("tits", checks)


def suite_atlas(params: Sequence[int] = range(2, 7)) -> SuiteResult:
  """The invariant grid and the golden records"""
  checks = [Check(f"invariants {r.case_id}", r.passed, ", ".join(c.name for c in r.failures))
            for r in verify_atlas_grid(params)]

  symmetric = get_case(CaseId("symmetric", n=3))
  components = {frozenset(c) for c in symmetric.quiver.connected_components()}
  expected = {frozenset({"(0)", "(2)", "(3)"}), frozenset({"(1)'", "(3)'"}), frozenset({"(1)"}), frozenset({"(2)'"})}
  checks.append(Check("symmetric n=3", len(symmetric.quiver.vertices) == 7 and components == expected,
                      "chains (0)-(2)-(3) and (1)'-(3)', isolated (1) and (2)'"))

  sp = get_case(CaseId("sp2n_gl3", n=3))
  codims = tuple(sp.orbit(label).codim for label in ("(0,0)", "(1,0)", "(2,0)", "(2,2)", "(3,0)", "(3,2)"))
  checks.append(Check("sp2n_gl3 n=3 codimensions", codims == (18, 10, 5, 4, 3, 0), f"{codims}"))
  swaps = {"(3,2)": "(0,0)", "(2,2)": "(1,0)", "(3,0)": "(2,0)"}
  swaps.update({w: v for v, w in list(swaps.items())})
  checks.append(Check("sp2n_gl3 n=3 fourier", fourier_permutation(CaseId("sp2n_gl3", n=3)) == swaps))

  checks.append(Check("sp4_gl4 is EE_6", get_case(CaseId("sp4_gl4")).quiver.is_isomorphic_to(make_EE6())))
  cover = projective_cover_dims(CaseId("sp2n_gl3", n=2), "(2,2)")
  checks.append(Check("P_(2,2) has length two", sum(cover.values()) == 2 and cover["(2,0)"] == 1, f"{cover}"))
  return SuiteResult("atlas", checks)


def suite_moment(count: int = 20) -> SuiteResult:
  """Jacobian rank against orbit tangent rank"""
  checks = []
  for action in standard_actions():
    records = rank_sweep(action, count)
    ranks = sorted({r.jacobian for r in records})
    checks.append(Check(action.name, all(r.equal for r in records), f"{len(records)} points, ranks {ranks}"))
  return SuiteResult("moment", checks)


def suite_lemma_m2() -> SuiteResult:
  """Length two certificate for P_(2,2)"""
  report = lemma_m2_check()
  return SuiteResult("lemma-m2", [Check("generator symbols vanish at v", report.generators_vanish),
                                  Check("symbols match the block symplectic form", report.symplectic_consistent),
                                  Check("h(v) != 0", report.h_value != 0, f"h(v) = {report.h_value}")])


# Map from suite names to their runners
SUITES: Dict[str, Callable[[], SuiteResult]] = {
  "quivers"  : suite_quivers,
  "strings"  : suite_strings,
  "tits"     : suite_tits,
  "atlas"    : suite_atlas,
  "moment"   : suite_moment,
  "lemma-m2" : suite_lemma_m2
}


def run_suite(name: str) -> SuiteResult:
  """
  @brief Runs one suite by name
  @raises KeyError  Raised for unknown suite names
  """
  result = SUITES[name]()
  logger.info("%s", result)
  return result


def run_all() -> List[SuiteResult]:
  """Every suite in a fixed order"""
  return [run_suite(name) for name in SUITES]

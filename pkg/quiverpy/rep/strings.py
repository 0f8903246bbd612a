"""
@package quiverpy.rep.strings
@brief String modules of AA_n, their classification and the weight-chain realization
@date 2026-10-16
"""
from typing import List, Sequence
from concurrent.futures import ThreadPoolExecutor
from itertools import product
import logging

from ..exceptions import DecompositionError, RepresentationError, RelationViolation
from ..math.Field import Field
from ..quiver.builders import make_AA
from .Rep import Rep
from .StringSpec import StringSpec
from .decompose import decompose
from .hom import is_isomorphic


__all__ = ["string_module", "all_string_specs", "classify_AA", "weight_chain_rep"]


logger = logging.getLogger(__name__)


def string_module(spec: StringSpec, field: Field = None) -> Rep:
  """
  @brief The string module I_{i,j}^Sigma on AA_n
  @details One-dimensional spaces on the vertices i, ..., j. Sign l puts the identity on alpha_{i+l-1} for '+' and on
  beta_{i+l-1} for '-', the other arrow of the edge is zero.
  """
  dims = {f"({k})": 1 for k in range(spec.i, spec.j + 1)}
  maps = {}
  for l, sign in enumerate(spec.signs, start=1):
    maps[f"alpha{spec.i + l - 1}" if sign == "+" else f"beta{spec.i + l - 1}"] = [[1]]
  return Rep(make_AA(spec.n), dims, maps, field)


def all_string_specs(n: int) -> List[StringSpec]:
  """Every StringSpec of AA_n, sorted by (i, j, signs)"""
  specs = []
  for i in range(1, n + 1):
    for j in range(i, n + 1):
      specs.extend(StringSpec(n, i, j, "".join(signs)) for signs in product("+-", repeat=j - i))
  return sorted(specs)


def _chain_length(V: Rep) -> int:
  n = len(V.presentation.vertices)
  if n == 0 or V.presentation != make_AA(n):
    raise RepresentationError("Representation does not live on a quiver AA_n!")
  return n


def classify_AA(V: Rep, workers: int = 1) -> List[StringSpec]:
  """
  @brief Decomposes a representation of AA_n into string modules
  @details Each summand is compared with every string module of the same dimension vector. The comparisons may
  run on a thread pool, the result is collected in a fixed order.
  @param V                    A valid representation of AA_n
  @param workers              Number of threads for the isomorphism tests
  @raises RelationViolation    Raised if V does not satisfy the relations
  @raises DecompositionError   Raised if some summand matches no string module
  @returns                    The string labels of the summands, sorted
  """
  n = _chain_length(V)
  V.check()

  result = []
  for summand in decompose(V).summands:
    support = [k + 1 for k, d in enumerate(summand.dim_vector) if d > 0]
    if any(d > 1 for d in summand.dim_vector) or support != list(range(support[0], support[-1] + 1)):
      raise DecompositionError(f"Summand is not supported on an interval with one-dimensional spaces! ({summand})")
    i, j = support[0], support[-1]
    candidates = [StringSpec(n, i, j, "".join(s)) for s in product("+-", repeat=j - i)]
    test = lambda spec: is_isomorphic(summand, string_module(spec, V.field))
    if workers > 1:
      with ThreadPoolExecutor(max_workers=workers) as pool:
        matches = list(pool.map(test, candidates))
    else:
      matches = [test(spec) for spec in candidates]
    found = [spec for spec, match in zip(candidates, matches) if match]
    if len(found) == 0:
      raise DecompositionError(f"Summand matches no string module! ({summand!r})")
    result.append(found[0])
  logger.debug("Classified into %d strings", len(result))
  return sorted(result)


def _as_matrix(value: object) -> List[List[object]]:
  """Scalars stand for 1 x 1 matrices"""
  if isinstance(value, (list, tuple)):
    return [list(row) for row in value]
  return [[value]]


def weight_chain_rep(dims: Sequence[int], f_maps: Sequence[object], fstar_maps: Sequence[object],
                     field: Field = None) -> Rep:
  """
  @brief The AA_{n+1} representation of a chain of weight spaces
  @details Vertex (k) carries the weight space M_{sigma^(k-1-n)}, so the chain runs from M_{sigma^-n} to
  M_{sigma^0}. The multiplication by f goes right (alpha_k) and the action of f* goes left (beta_k).
  @param dims               Dimensions of the n + 1 weight spaces
  @param f_maps             n matrices (dims[k+1] x dims[k]) of f, scalars allowed for 1 x 1
  @param fstar_maps         n matrices (dims[k] x dims[k+1]) of f*
  @param field              Field of the entries. Defaults to the rationals
  @raises RelationViolation  Raised if f f* or f* f does not vanish
  @returns                  The representation
  """
  n = len(dims) - 1
  if n < 0:
    raise RepresentationError("A weight chain needs at least one weight space!")
  if len(f_maps) != n or len(fstar_maps) != n:
    raise RepresentationError(f"A chain of {n + 1} weight spaces needs {n} maps f and f*! ({len(f_maps)}, {len(fstar_maps)})")

  labels = [f"({k})" for k in range(1, n + 2)]
  maps = {}
  for k in range(n):
    if dims[k] > 0 and dims[k + 1] > 0:
      maps[f"alpha{k + 1}"] = _as_matrix(f_maps[k])
      maps[f"beta{k + 1}"]  = _as_matrix(fstar_maps[k])
  rep = Rep(make_AA(n + 1), dict(zip(labels, dims)), maps, field)
  report = rep.validate()
  if not report:
    raise RelationViolation(f"The weight chain violates a relation! ({' '.join(report.relation.arrows)})",
                            report.relation.arrows)
  return rep

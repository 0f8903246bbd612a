"""
@package quiverpy.reptype.census
@brief Brute-force census of representations over small prime fields
@details Every matrix assignment over F_p satisfying the relations is enumerated, the assignments are grouped by
rank invariants and then split into isomorphism classes. The enumeration may be spread over a process pool;
chunks are merged in lexicographic order so the report does not depend on the number of workers.
@date 2026-10-16
"""
from typing import Dict, List, Literal, Sequence, Tuple, Union
from concurrent.futures import ProcessPoolExecutor
from itertools import product
import logging
import numpy as np

from ..exceptions import BudgetExceeded, RepresentationError
from ..math import linalg
from ..math.Field import Field
from ..quiver.QuiverPresentation import QuiverPresentation
from ..quiver.builders import make_AA
from ..rep.Rep import Rep
from ..rep.decompose import decompose, is_indecomposable
from ..rep.hom import is_isomorphic
from ..rep.strings import all_string_specs, string_module
from .CensusReport import CensusReport


__all__ = ["CENSUS_PRIMES", "MAX_CELLS", "MAX_ASSIGNMENTS", "census", "census_all", "finite_type_check"]


logger = logging.getLogger(__name__)


CENSUS_PRIMES   = (2, 3, 5, 7)
MAX_CELLS       = 24
MAX_ASSIGNMENTS = 1 << 20


def _dims(pres: QuiverPresentation, dim_vector: Union[Sequence[int], Dict[str, int]]) -> Dict[str, int]:
  if isinstance(dim_vector, dict):
    return {v: int(dim_vector.get(v, 0)) for v in pres.vertices}
  if len(dim_vector) != len(pres.vertices):
    raise RepresentationError(f"Dimension vector does not match the vertices! ({len(dim_vector)} != {len(pres.vertices)})")
  return {v: int(d) for v, d in zip(pres.vertices, dim_vector)}


def _valid_chunk(shapes: Tuple[Tuple[int, int], ...], relations: Tuple[Tuple[int, ...], ...], p: int,
                 prefix: Tuple[int, ...], tail: int) -> List[Tuple[int, ...]]:
  """Assignments starting with `prefix` whose relation composites vanish mod p"""
  valid = []
  for rest in product(range(p), repeat=tail):
    cells = prefix + rest
    matrices, offset = [], 0
    for rows, cols in shapes:
      matrices.append(np.array(cells[offset:offset + rows * cols], dtype=np.int64).reshape(rows, cols))
      offset += rows * cols
    ok = True
    for relation in relations:
      M = matrices[relation[0]]
      for k in relation[1:]:
        M = (matrices[k] @ M) % p
      if M.any():
        ok = False
        break
    if ok:
      valid.append(cells)
  return valid


def _enumerate(pres: QuiverPresentation, dims: Dict[str, int], p: int, workers: int) -> Tuple[List[str], List[Tuple[int, int]], List[Tuple[int, ...]]]:
  """All relation-respecting assignments, lexicographically ordered"""
  active = [a for a in pres.arrows if dims[a.head] > 0 and dims[a.tail] > 0]
  shapes = tuple((dims[a.head], dims[a.tail]) for a in active)
  position = {a.id: k for k, a in enumerate(active)}
  relations = tuple(tuple(position[a] for a in r.arrows) for r in pres.relations
                    if all(a in position for a in r.arrows))

  cells  = sum(r * c for r, c in shapes)
  split  = min(cells, 2)
  chunks = [(shapes, relations, p, prefix, cells - split) for prefix in product(range(p), repeat=split)]
  if workers > 1 and len(chunks) > 1:
    with ProcessPoolExecutor(max_workers=workers) as pool:
      results = list(pool.map(_valid_chunk, *zip(*chunks)))
  else:
    results = [_valid_chunk(*chunk) for chunk in chunks]
  logger.debug("Enumerated %d chunks of %d cells over F_%d", len(chunks), cells, p)
  return [a.id for a in active], list(shapes), [cells for chunk in results for cells in chunk]


def _build(pres: QuiverPresentation, dims: Dict[str, int], field: Field, arrow_ids: List[str],
           shapes: List[Tuple[int, int]], cells: Tuple[int, ...]) -> Rep:
  maps, offset = {}, 0
  for arrow_id, (rows, cols) in zip(arrow_ids, shapes):
    flat = cells[offset:offset + rows * cols]
    maps[arrow_id] = [list(flat[i * cols:(i + 1) * cols]) for i in range(rows)]
    offset += rows * cols
  return Rep(pres, dims, maps, field)


def _invariants(V: Rep, invariants: str) -> Tuple[int, ...]:
  """Ranks of the arrow matrices, and of every nonzero path composite for 'paths'"""
  if invariants == "arrows":
    return tuple(linalg.rank(V.matrix(a.id)) for a in V.presentation.arrows)
  return tuple(linalg.rank(V.path_matrix(path)) for path in V.presentation.nonzero_paths() if len(path) > 0)


def census(pres: QuiverPresentation, dim_vector: Union[Sequence[int], Dict[str, int]], p: int,
           max_cells: int = MAX_CELLS, workers: int = 1, invariants: Literal["paths", "arrows"] = "paths",
           max_search: int = 4096) -> CensusReport:
  """
  @brief Isomorphism classes of representations with a fixed dimension vector over F_p
  @param pres                 The quiver with relations
  @param dim_vector           Dimensions in vertex order, or a map from vertices to dimensions
  @param p                    The prime, one of 2, 3, 5, 7
  @param max_cells            Largest number of matrix entries enumerated. Capped at MAX_CELLS
  @param workers              Number of processes for the enumeration
  @param invariants           Bucket key: 'paths' (ranks of all nonzero paths) or 'arrows' (ranks of arrows only)
  @param max_search           Largest Hom space searched by the isomorphism test
  @raises RepresentationError  Raised for an unsupported prime or a mismatched dimension vector
  @raises BudgetExceeded       Raised if the enumeration exceeds the budget
  @returns                    The census report
  """
  if p not in CENSUS_PRIMES:
    raise RepresentationError(f"Unsupported census prime! ({p} not in {list(CENSUS_PRIMES)})")
  if invariants not in ("paths", "arrows"):
    raise RepresentationError(f"Invalid bucket invariants! ({invariants} not in ['paths', 'arrows'])")
  if max_cells > MAX_CELLS:
    raise BudgetExceeded(f"Cell budget above the hard cap! ({max_cells} > {MAX_CELLS})")

  dims  = _dims(pres, dim_vector)
  cells = sum(dims[a.head] * dims[a.tail] for a in pres.arrows)
  if cells > max_cells:
    raise BudgetExceeded(f"Too many matrix entries! ({cells} > {max_cells})")
  if p ** cells > MAX_ASSIGNMENTS:
    raise BudgetExceeded(f"Too many assignments! ({p}^{cells} > {MAX_ASSIGNMENTS})")

  field = Field.prime(p)
  arrow_ids, shapes, assignments = _enumerate(pres, dims, p, workers)

  buckets, classes = {}, []
  for cells in assignments:
    V = _build(pres, dims, field, arrow_ids, shapes, cells)
    bucket = buckets.setdefault(_invariants(V, invariants), [])
    if any(is_isomorphic(V, W, max_search) for W in bucket):
      continue
    bucket.append(V)
    classes.append(V)

  indecomposables = [V for V in classes if not V.is_zero and is_indecomposable(V)]
  logger.debug("Census at %s: %d assignments, %d buckets, %d classes", tuple(dims.values()), len(assignments),
               len(buckets), len(classes))
  return CensusReport(pres, tuple(dims[v] for v in pres.vertices), p, classes, indecomposables)


def census_all(pres: QuiverPresentation, bound: Union[int, Sequence[int]], p: int, **kwargs) -> CensusReport:
  """
  @brief Union of the censuses at every nonzero dimension vector below a bound
  @param pres    The quiver with relations
  @param bound   Entrywise bound, a single integer applies to every vertex
  @param p       The prime
  @param kwargs  Passed on to census
  @returns       The merged report
  """
  n = len(pres.vertices)
  bound = (bound,) * n if isinstance(bound, int) else tuple(bound)
  report = CensusReport(pres, bound, p, [], [])
  for dims in product(*(range(b + 1) for b in bound)):
    if any(dims):
      report = report.merge(census(pres, dims, p, **kwargs), bound)
  return report


def finite_type_check(n: int, p: int) -> bool:
  """
  @brief Checks empirically that every indecomposable of AA_n is a string module
  @details Runs the census over all dimension vectors with entries <= 1, where every string lives, and a spot
  census at (2, 1, 0, ..., 0) whose classes must decompose into strings.
  @param n                    Length of the chain, at most 4
  @param p                    The prime, 2 or 3
  @raises RepresentationError  Raised outside the supported range
  @returns                    Whether every indecomposable found is a string module
  """
  if not (1 <= n <= 4):
    raise RepresentationError(f"Chain length out of range! ({n} not between 1 and 4)")
  if p not in (2, 3):
    raise RepresentationError(f"Unsupported prime! ({p} not in [2, 3])")

  pres, field = make_AA(n), Field.prime(p)
  strings = [string_module(spec, field) for spec in all_string_specs(n)]

  def is_string(V: Rep) -> bool:
    return any(S.dim_vector == V.dim_vector and is_isomorphic(V, S) for S in strings)

  report = census_all(pres, 1, p)
  ok = all(is_string(V) for V in report.representatives)

  spot = census(pres, (2, 1) + (0,) * (n - 2) if n >= 2 else (2,), p)
  ok = ok and spot.indecomposable_count == 0
  for V in spot.classes:
    ok = ok and all(is_string(summand) for summand in decompose(V).summands)

  logger.info("AA_%d over F_%d: %d indecomposables, finite type check %s", n, p, report.indecomposable_count,
              "passed" if ok else "failed")
  return ok

"""
@package quiverpy.rep.decompose
@brief Indecomposability tests and Krull-Schmidt decompositions
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
from enum import Enum
from itertools import combinations, product
import logging
import random
from sympy.polys.matrices import DomainMatrix

from ..exceptions import BudgetExceeded, DecompositionError, RepresentationError
from ..math import linalg
from .Rep import Rep
from .hom import _HomBasis, radical_dim


__all__ = ["Indecomposability", "Decomposition", "indecomposability", "is_indecomposable", "decompose"]


logger = logging.getLogger(__name__)


# Random endomorphisms tried over Q after the fixed candidates
_RANDOM_CANDIDATES = 32
_CANDIDATE_SEED    = 0


class Indecomposability(Enum):
  """Three-valued answer of the indecomposability test"""
  INDECOMPOSABLE = "indecomposable"
  DECOMPOSABLE   = "decomposable"
  RATIONAL_ONLY  = "indecomposable over the rationals, absolute indecomposability undetermined"


class Decomposition:
  """
  @brief Indecomposable summands of a representation together with an explicit isomorphism
  @details The witness is a matrix per vertex mapping the direct sum of the summands, taken in order, onto the
  decomposed representation.
  """

  def __init__(self, original: Rep, summands: Sequence[Rep], witness: Dict[str, DomainMatrix]) -> None:
    """
    @brief Constructor
    @param original  The decomposed representation
    @param summands  The indecomposable summands
    @param witness   Isomorphism from the direct sum of the summands to the original
    @returns         None
    """
    self.__original = original
    self.__summands = tuple(summands)
    self.__witness  = dict(witness)


  def __len__(self) -> int:
    return len(self.__summands)


  def __iter__(self) -> Iterator[Rep]:
    return iter(self.__summands)


  def __str__(self) -> str:
    """Simple string representation"""
    return " + ".join(str(s.dim_vector) for s in self.__summands) if self.__summands else "0"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"Decomposition into {len(self)} summands:\n" + "\n".join(repr(s) for s in self.__summands)


  @property
  def original(self) -> Rep:
    return self.__original


  @property
  def summands(self) -> Tuple[Rep, ...]:
    """The indecomposable summands"""
    return self.__summands


  @property
  def witness(self) -> Dict[str, DomainMatrix]:
    """Isomorphism from the direct sum of the summands onto the original, per vertex"""
    return dict(self.__witness)


  def direct_sum(self) -> Rep:
    """Direct sum of the summands"""
    total = Rep.zero(self.__original.presentation, {}, self.__original.field)
    for summand in self.__summands:
      total = total.direct_sum(summand)
    return total


  def is_valid(self) -> bool:
    """Whether the witness is an invertible intertwiner from the direct sum onto the original"""
    S, V, P = self.direct_sum(), self.__original, self.__witness
    if S.dim_vector != V.dim_vector:
      return False
    if not all(linalg.determinant(P[v]) for v in V.presentation.vertices):
      return False
    return all(linalg.equal(linalg.matmul(V.matrix(a.id), P[a.tail]), linalg.matmul(P[a.head], S.matrix(a.id)))
               for a in V.presentation.arrows)


def _matrix_power(A: DomainMatrix, m: int) -> DomainMatrix:
  result = A
  for _ in range(m - 1):
    result = linalg.matmul(result, A)
  return result


def _split_along(V: Rep, phi: Dict[str, DomainMatrix],
                 factors: Sequence[Tuple[Sequence[object], int]]) -> Optional[Tuple[List[Rep], Dict[str, DomainMatrix]]]:
  """
  @brief Splits V along the generalized eigenspaces of an endomorphism
  @details For pairwise coprime factors g_l with prod g_l^m_l annihilating phi, the kernels of g_l(phi_x)^m_l are
  subrepresentations whose direct sum is V.
  @param V        The representation
  @param phi      An endomorphism of V
  @param factors  Pairs (coefficients of g_l with the leading one first, m_l)
  @returns        The nonzero pieces and the change of basis P (columns: kernel bases), or None if only one piece
  """
  K = V.field.domain
  vertices = V.presentation.vertices
  columns  = {v: [] for v in vertices}
  dims     = [dict() for _ in factors]
  for v in vertices:
    for l, (coeffs, m) in enumerate(factors):
      basis = linalg.nullspace(_matrix_power(linalg.poly_of_matrix(coeffs, phi[v]), m)) if V.dim(v) > 0 else []
      dims[l][v] = len(basis)
      columns[v].extend(basis)
    assert len(columns[v]) == V.dim(v), f"Generalized eigenspaces do not span! ({len(columns[v])} != {V.dim(v)})"

  nonzero = [l for l in range(len(factors)) if any(dims[l].values())]
  if len(nonzero) < 2:
    return None

  P = {}
  for v in vertices:
    n = V.dim(v)
    P[v] = DomainMatrix([[col[i] for col in columns[v]] for i in range(n)], (n, n), K) if n > 0 \
      else linalg.zeros(0, 0, V.field)
  W = V.change_basis(P)

  pieces = []
  offsets = {v: 0 for v in vertices}
  for l in range(len(factors)):
    ranges = {v: range(offsets[v], offsets[v] + dims[l][v]) for v in vertices}
    for v in vertices:
      offsets[v] += dims[l][v]
    if l not in nonzero:
      continue
    maps = {a.id: linalg.submatrix(W.matrix(a.id), ranges[a.head], ranges[a.tail]) for a in V.presentation.arrows}
    pieces.append(Rep(V.presentation, dims[l], maps, V.field))
  return pieces, P


def _rational_candidates(d: int) -> Iterator[Tuple[int, ...]]:
  """
  @brief Coefficient vectors of the endomorphisms tried for splitting
  @details Basis elements, pairwise combinations and a sum with distinct weights come first, then a fixed number
  of seeded random combinations with entries in -3..3. The search is a heuristic: a decomposable representation
  whose every tried endomorphism has an irreducible characteristic polynomial is reported as RATIONAL_ONLY.
  """
  for i in range(d):
    yield tuple(1 if k == i else 0 for k in range(d))
  for i, j in combinations(range(d), 2):
    for scale in (1, 2, 3):
      yield tuple(1 if k == i else scale if k == j else 0 for k in range(d))
  yield tuple(range(1, d + 1))
  rng = random.Random(_CANDIDATE_SEED)
  for _ in range(_RANDOM_CANDIDATES if d > 1 else 0):
    coefficients = tuple(rng.randint(-3, 3) for _ in range(d))
    if any(coefficients):
      yield coefficients


def _rational_split(V: Rep) -> Optional[Tuple[List[Rep], Dict[str, DomainMatrix]]]:
  """Splitting over Q from an endomorphism whose characteristic polynomial has two coprime factors"""
  basis = _HomBasis(V, V)
  K = V.field.domain
  active = [v for v in V.presentation.vertices if V.dim(v) > 0]
  for coefficients in _rational_candidates(len(basis.vectors)):
    phi = basis.combination([K(c) for c in coefficients])
    factors = linalg.charpoly_factors(linalg.block_diagonal([phi[v] for v in active], K))
    if len(factors) >= 2:
      logger.debug("Splitting along %d characteristic polynomial factors", len(factors))
      return _split_along(V, phi, factors)
  return None


def _idempotent_split(V: Rep, max_end_dim: int) -> Optional[Tuple[List[Rep], Dict[str, DomainMatrix]]]:
  """Splitting over F_p from a nontrivial idempotent found by exhaustive search of End(V)"""
  basis = _HomBasis(V, V)
  d = len(basis.vectors)
  if d <= 1:
    return None
  if d > max_end_dim:
    raise BudgetExceeded(f"Endomorphism algebra too large for idempotent search! ({d} > {max_end_dim})")

  K = V.field.domain
  vertices = V.presentation.vertices
  identity = {v: linalg.eye(V.dim(v), V.field) for v in vertices}
  for coefficients in product(list(V.field.elements()), repeat=d):
    if not any(coefficients):
      continue
    e = basis.combination(coefficients)
    if all(linalg.equal(e[v], identity[v]) for v in vertices):
      continue
    if all(linalg.equal(linalg.matmul(e[v], e[v]), e[v]) for v in vertices):
      logger.debug("Found a nontrivial idempotent")
      return _split_along(V, e, [([K.one, K.zero], 1), ([K.one, -K.one], 1)])
  return None


def _split(V: Rep, max_end_dim: int) -> Tuple[Indecomposability, Optional[Tuple[List[Rep], Dict[str, DomainMatrix]]]]:
  if V.is_zero:
    raise RepresentationError("The zero representation is neither decomposable nor indecomposable!")

  if V.field.is_finite:
    split = _idempotent_split(V, max_end_dim)
    return (Indecomposability.DECOMPOSABLE if split else Indecomposability.INDECOMPOSABLE), split

  d, r = radical_dim(V)
  if d - r == 1:
    return Indecomposability.INDECOMPOSABLE, None
  split = _rational_split(V)
  if split is not None:
    return Indecomposability.DECOMPOSABLE, split
  return Indecomposability.RATIONAL_ONLY, None


def indecomposability(V: Rep, max_end_dim: int = 20) -> Indecomposability:
  """
  @brief Three-valued indecomposability test
  @details Over Q, V is absolutely indecomposable iff End(V)/rad End(V) is one dimensional. Otherwise a rational
  splitting is searched for among finitely many endomorphisms, and RATIONAL_ONLY is returned when none splits. Over
  F_p the answer comes from an exhaustive search for a nontrivial idempotent in End(V).
  @param V                    A nonzero representation
  @param max_end_dim          Largest dim End(V) searched over a prime field
  @raises RepresentationError  Raised for the zero representation
  @raises BudgetExceeded       Raised if End(V) is too large to search
  @returns                    The verdict
  """
  verdict, _ = _split(V, max_end_dim)
  if verdict is Indecomposability.RATIONAL_ONLY:
    logger.warning("Representation %s: %s", V, verdict.value)
  return verdict


def is_indecomposable(V: Rep, max_end_dim: int = 20) -> bool:
  """Whether V is indecomposable (over the rationals, when absolute indecomposability is undetermined)"""
  return indecomposability(V, max_end_dim) is not Indecomposability.DECOMPOSABLE


def decompose(V: Rep, max_end_dim: int = 20) -> Decomposition:
  """
  @brief Krull-Schmidt decomposition
  @details Endomorphisms taken from the End basis are split along the factors of their characteristic
  polynomials (idempotents over F_p) and the pieces are decomposed recursively. The changes of basis compose into
  the witness isomorphism.
  @param V                   The representation
  @param max_end_dim         Largest dim End searched over a prime field
  @raises DecompositionError  Raised if End/rad is larger than one dimensional but no rational splitting is found
  @returns                   The decomposition
  """
  vertices = V.presentation.vertices
  if V.is_zero:
    return Decomposition(V, [], {v: linalg.zeros(0, 0, V.field) for v in vertices})

  verdict, split = _split(V, max_end_dim)
  if verdict is Indecomposability.INDECOMPOSABLE:
    return Decomposition(V, [V], {v: linalg.eye(V.dim(v), V.field) for v in vertices})
  if verdict is Indecomposability.RATIONAL_ONLY:
    raise DecompositionError(f"Cannot split over Q! ({V}: End/rad has dimension > 1)")

  pieces, P = split
  summands, blocks = [], {v: [] for v in vertices}
  for piece in pieces:
    sub = decompose(piece, max_end_dim)
    summands.extend(sub.summands)
    for v in vertices:
      blocks[v].append(sub.witness[v])
  witness = {v: linalg.matmul(P[v], linalg.block_diagonal(blocks[v], V.field.domain)) for v in vertices}
  return Decomposition(V, summands, witness)

"""
@package quiverpy.rep.hom
@brief Homomorphism spaces, endomorphism algebras and isomorphism tests of representations
@details A morphism phi: V -> W is a matrix phi_x: V_x -> W_x per vertex with phi_h V(a) = W(a) phi_t for every
arrow a: t -> h. These conditions are linear in the entries of phi and Hom(V, W) is computed as an exact
nullspace.
@date 2026-10-16
"""
from typing import Dict, List, Sequence, Tuple
from itertools import product
import logging
from sympy import QQ, symbols
from sympy.polys.matrices import DomainMatrix

from ..exceptions import BudgetExceeded
from ..math import linalg
from .Rep import Rep


__all__ = ["hom_space", "hom_dim", "end_algebra", "structure_constants", "radical_dim", "is_isomorphic"]


logger = logging.getLogger(__name__)


# Per-vertex determinant grids larger than this fall back to a symbolic determinant
_MAX_GRID = 20_000


class _HomBasis:
  """Basis of Hom(V, W) as flat vectors, with the layout of the unknowns"""

  def __init__(self, V: Rep, W: Rep) -> None:
    V.require_compatible(W)
    self.V, self.W = V, W
    self.domain    = V.field.domain

    self.layout = {}
    offset = 0
    for v in V.presentation.vertices:
      self.layout[v] = (offset, W.dim(v), V.dim(v))
      offset += W.dim(v) * V.dim(v)
    self.size = offset

    equations = self.__equations()
    if len(equations) == 0:
      self.vectors, self.free = linalg.kernel(DomainMatrix.zeros((0, self.size), self.domain).to_dense())
    else:
      self.vectors, self.free = linalg.kernel(DomainMatrix(equations, (len(equations), self.size), self.domain))


  def __equations(self) -> List[List[object]]:
    """One linear equation per entry of phi_h V(a) - W(a) phi_t"""
    K, rows = self.domain, []
    for arrow in self.V.presentation.arrows:
      A = linalg.entries(self.V.matrix(arrow.id))
      B = linalg.entries(self.W.matrix(arrow.id))
      off_h, rows_h, cols_h = self.layout[arrow.head]
      off_t, rows_t, cols_t = self.layout[arrow.tail]
      for i in range(rows_h):
        for j in range(cols_t):
          row = [K.zero] * self.size
          for k in range(cols_h):
            if A[k][j]:
              row[off_h + i * cols_h + k] += A[k][j]
          for k in range(rows_t):
            if B[i][k]:
              row[off_t + k * cols_t + j] -= B[i][k]
          if any(row):
            rows.append(row)
    return rows


  def as_maps(self, vector: Sequence[object]) -> Dict[str, DomainMatrix]:
    """Flat vector to a matrix per vertex"""
    maps = {}
    for v, (offset, m, n) in self.layout.items():
      if m == 0 or n == 0:
        maps[v] = DomainMatrix.zeros((m, n), self.domain).to_dense()
      else:
        maps[v] = DomainMatrix([list(vector[offset + i * n: offset + (i + 1) * n]) for i in range(m)], (m, n), self.domain)
    return maps


  def flatten(self, maps: Dict[str, DomainMatrix]) -> List[object]:
    vector = [self.domain.zero] * self.size
    for v, (offset, m, n) in self.layout.items():
      for i, row in enumerate(linalg.entries(maps[v])):
        vector[offset + i * n: offset + (i + 1) * n] = row
    return vector


  def coordinates(self, maps: Dict[str, DomainMatrix]) -> List[object]:
    """Coordinates of a morphism in the basis: its entries at the free columns of the echelon basis"""
    vector = self.flatten(maps)
    return [vector[k] for k in self.free]


  def combination(self, coefficients: Sequence[object]) -> Dict[str, DomainMatrix]:
    vector = [self.domain.zero] * self.size
    for c, basis_vector in zip(coefficients, self.vectors):
      if c:
        vector = [x + c * y for x, y in zip(vector, basis_vector)]
    return self.as_maps(vector)


def hom_space(V: Rep, W: Rep) -> List[Dict[str, DomainMatrix]]:
  """
  @brief Basis of Hom(V, W)
  @raises RepresentationError  Raised if the representations have different presentations or fields
  @returns                    List of morphisms, each a matrix (dim W_x x dim V_x) per vertex
  """
  basis = _HomBasis(V, W)
  return [basis.as_maps(vec) for vec in basis.vectors]


def hom_dim(V: Rep, W: Rep) -> int:
  """
  @brief Dimension of Hom(V, W)
  @raises RepresentationError  Raised if the representations have different presentations or fields
  """
  return len(_HomBasis(V, W).vectors)


def end_algebra(V: Rep) -> List[Dict[str, DomainMatrix]]:
  """Basis of the endomorphism algebra End(V)"""
  return hom_space(V, V)


def structure_constants(V: Rep) -> List[List[List[object]]]:
  """
  @brief Multiplication table of End(V) in its echelon basis
  @returns  c with E_i E_j = sum_k c[i][j][k] E_k, where (E_i E_j)_x = E_i[x] E_j[x]
  """
  basis = _HomBasis(V, V)
  maps  = [basis.as_maps(vec) for vec in basis.vectors]
  table = []
  for left in maps:
    row = []
    for right in maps:
      row.append(basis.coordinates({v: linalg.matmul(left[v], right[v]) for v in left}))
    table.append(row)
  return table


def radical_dim(V: Rep) -> Tuple[int, int]:
  """
  @brief Dimension of End(V) and of its Jacobson radical over the rationals
  @details The radical is the radical of the trace form T_ij = tr(L_i L_j) of the left regular representation,
  which is valid in characteristic 0 only.
  @returns  (dim End(V), dim rad End(V))
  """
  assert V.field.characteristic == 0, "The trace form radical needs characteristic 0!"
  c = structure_constants(V)
  d = len(c)
  if d == 0:
    return 0, 0
  K = V.field.domain
  form = [[sum((c[i][l][k] * c[j][k][l] for k in range(d) for l in range(d)), K.zero) for j in range(d)]
          for i in range(d)]
  return d, len(linalg.nullspace(DomainMatrix(form, (d, d), K)))


def _has_invertible_on_grid(matrices: Sequence[List[List[object]]], n: int, degree: int, K) -> bool:
  """Whether some integer combination with coefficients in {0, ..., degree} has nonzero determinant"""
  for point in product(range(degree + 1), repeat=len(matrices)):
    data = [[sum((K(c) * m[i][j] for c, m in zip(point, matrices) if c), K.zero) for j in range(n)] for i in range(n)]
    if DomainMatrix(data, (n, n), K).det():
      return True
  return False


def _has_invertible_symbolic(matrices: Sequence[List[List[object]]], n: int) -> bool:
  """Whether the determinant of a generic combination is a nonzero polynomial"""
  ts = symbols(f"t0:{len(matrices)}")
  R  = QQ.poly_ring(*ts)
  gens = R.gens
  data = [[sum((gens[k] * R.convert_from(m[i][j], QQ) for k, m in enumerate(matrices)), R.zero) for j in range(n)]
          for i in range(n)]
  return bool(DomainMatrix(data, (n, n), R).det())


def is_isomorphic(V: Rep, W: Rep, max_search: int = 4096) -> bool:
  """
  @brief Decides whether two representations are isomorphic
  @details Dimension vectors and the four hom dimensions between V and W are compared first. Over Q an
  invertible morphism exists iff, for every vertex, the determinant of a generic combination sum_k t_k H_k[x] of
  the Hom basis is a nonzero polynomial of degree dim V_x. That is tested by evaluation on the grid
  {0, ..., dim V_x}^h. Over F_p every element of Hom(V, W) is tried.
  @param V                    First representation
  @param W                    Second representation
  @param max_search           Largest Hom(V, W) searched exhaustively over a prime field
  @raises RepresentationError  Raised if the representations have different presentations or fields
  @raises BudgetExceeded       Raised if Hom(V, W) is too large to search over a prime field
  @returns                    Whether V and W are isomorphic
  """
  V.require_compatible(W)
  if V.dim_vector != W.dim_vector:
    return False
  if V.is_zero:
    return True

  basis = _HomBasis(V, W)
  h = len(basis.vectors)
  if not (h == hom_dim(W, V) == hom_dim(V, V) == hom_dim(W, W)):
    return False

  maps = [basis.as_maps(vec) for vec in basis.vectors]
  K = V.field.domain
  vertices = [v for v in V.presentation.vertices if V.dim(v) > 0]

  if V.field.is_finite:
    p = V.field.characteristic
    if p ** h > max_search:
      raise BudgetExceeded(f"Hom space too large for exhaustive search! ({p}^{h} > {max_search})")
    for coefficients in product(list(V.field.elements()), repeat=h):
      if not any(coefficients):
        continue
      phi = basis.combination(coefficients)
      if all(linalg.determinant(phi[v]) for v in vertices):
        return True
    return False

  for v in vertices:
    n = V.dim(v)
    matrices = [linalg.entries(m[v]) for m in maps]
    if (n + 1) ** h <= _MAX_GRID:
      found = _has_invertible_on_grid(matrices, n, n, K)
    else:
      logger.debug("Grid of size (%d + 1)^%d too large, using a symbolic determinant", n, h)
      found = _has_invertible_symbolic(matrices, n)
    if not found:
      return False
  return True

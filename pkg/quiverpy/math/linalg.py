"""
@package quiverpy.math.linalg
@brief Exact dense linear algebra helpers on top of sympy's DomainMatrix
@details Every function accepts and returns DomainMatrix objects (or plain lists of domain elements for vectors)
over the domain of a quiverpy Field. Degenerate shapes with a zero dimension are handled explicitly.
@date 2026-10-16
"""
from typing import List, Sequence, Tuple
from sympy import Poly, Symbol, QQ
from sympy.polys.matrices import DomainMatrix

from .Field import Field


__all__ = ["matrix", "zeros", "eye", "entries", "equal", "matmul", "is_zero", "rank", "rref", "kernel", "nullspace", "span_basis",
           "coordinates", "block_diagonal", "submatrix", "transpose", "determinant", "inverse", "charpoly_factors",
           "poly_of_matrix", "to_python_rows"]


def matrix(rows: Sequence[Sequence[object]], field: Field, shape: Tuple[int, int] = None) -> DomainMatrix:
  """
  @brief Builds a DomainMatrix from nested Python values
  @param rows   Row-major entries, convertible by Field.convert
  @param field  Field of the entries
  @param shape  Explicit shape. Needed when there are no rows (e.g. a 0 x n matrix)
  @returns      The matrix
  """
  if shape is None:
    shape = (len(rows), len(rows[0]) if len(rows) > 0 else 0)
  data = [[field.convert(value) for value in row] for row in rows]
  assert len(data) == shape[0] and all(len(row) == shape[1] for row in data), f"Rows do not match shape! {shape}"
  if shape[0] == 0 or shape[1] == 0:
    return DomainMatrix.zeros(shape, field.domain).to_dense()
  return DomainMatrix(data, shape, field.domain)


def zeros(m: int, n: int, field: Field) -> DomainMatrix:
  return DomainMatrix.zeros((m, n), field.domain).to_dense()


def eye(n: int, field: Field) -> DomainMatrix:
  return DomainMatrix.eye(n, field.domain).to_dense() if n > 0 else zeros(0, 0, field)


def entries(A: DomainMatrix) -> List[List[object]]:
  """Row-major list of domain elements"""
  m, n = A.shape
  if m == 0 or n == 0:
    return [[] for _ in range(m)]
  return A.to_list()


def to_python_rows(A: DomainMatrix, field: Field) -> List[List[object]]:
  """Row-major list of Python numbers (Fractions over Q, ints over F_p)"""
  return [[field.to_python(x) for x in row] for row in entries(A)]


def equal(A: DomainMatrix, B: DomainMatrix) -> bool:
  """
  @brief Entrywise equality of two matrices over the same domain
  @details DomainMatrix equality also compares the internal sparse or dense format, so the entries are compared instead
  """
  if A.shape != B.shape or A.domain != B.domain:
    return False
  m, n = A.shape
  if m == 0 or n == 0:
    return True
  return entries(A) == entries(B)


def matmul(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
  """Matrix product that tolerates zero inner or outer dimensions"""
  (m, k), (k2, n) = A.shape, B.shape
  assert k == k2, f"Inner dimensions must match! ({k} != {k2})"
  if m == 0 or n == 0 or k == 0:
    return DomainMatrix.zeros((m, n), A.domain).to_dense()
  return A * B


def is_zero(A: DomainMatrix) -> bool:
  m, n = A.shape
  if m == 0 or n == 0:
    return True
  return A.is_zero_matrix


def rank(A: DomainMatrix) -> int:
  m, n = A.shape
  if m == 0 or n == 0:
    return 0
  return A.rank()


def rref(A: DomainMatrix) -> Tuple[List[List[object]], Tuple[int, ...]]:
  """
  @brief Reduced row echelon form
  @returns  The nonzero rows of the echelon form and the pivot columns
  """
  m, n = A.shape
  if m == 0 or n == 0:
    return [], ()
  R, pivots = A.rref()
  return entries(R)[:len(pivots)], tuple(pivots)


def kernel(A: DomainMatrix) -> Tuple[List[List[object]], Tuple[int, ...]]:
  """
  @brief Basis of the right kernel {x : A x = 0} together with its free columns
  @details One basis vector per free column f, with 1 at f, -R[i][f] at the pivot columns and 0 elsewhere. The
  returned list is therefore already in reduced echelon form with respect to the free columns.
  @returns  List of vectors (lists of domain elements) and the free column of each
  """
  m, n = A.shape
  K = A.domain
  if n == 0:
    return [], ()
  if m == 0:
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)], tuple(range(n))

  rows, pivots = rref(A)
  free_columns = [j for j in range(n) if j not in pivots]
  basis = []
  for free in free_columns:
    vec = [K.zero] * n
    vec[free] = K.one
    for row, pivot in zip(rows, pivots):
      vec[pivot] = -row[free]
    basis.append(vec)
  return basis, tuple(free_columns)


def nullspace(A: DomainMatrix) -> List[List[object]]:
  """Basis of the right kernel {x : A x = 0}, see kernel"""
  return kernel(A)[0]


def span_basis(vectors: Sequence[Sequence[object]], n: int, domain) -> Tuple[List[List[object]], Tuple[int, ...]]:
  """
  @brief Reduced echelon basis of the span of the given vectors
  @details Coordinates of a vector in the span are its entries at the pivot columns
  @param vectors  The spanning vectors
  @param n        Ambient dimension
  @param domain   The sympy domain of the entries
  @returns        Echelon rows and pivot columns
  """
  if len(vectors) == 0 or n == 0:
    return [], ()
  return rref(DomainMatrix([list(v) for v in vectors], (len(vectors), n), domain))


def coordinates(vector: Sequence[object], pivots: Sequence[int]) -> List[object]:
  """Coordinates of a vector in a reduced echelon basis with the given pivots"""
  return [vector[p] for p in pivots]


def submatrix(A: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
  if len(rows) == 0 or len(cols) == 0:
    return DomainMatrix.zeros((len(rows), len(cols)), A.domain).to_dense()
  data = entries(A)
  return DomainMatrix([[data[i][j] for j in cols] for i in rows], (len(rows), len(cols)), A.domain)


def block_diagonal(blocks: Sequence[DomainMatrix], domain) -> DomainMatrix:
  m = sum(block.shape[0] for block in blocks)
  n = sum(block.shape[1] for block in blocks)
  if m == 0 or n == 0:
    return DomainMatrix.zeros((m, n), domain).to_dense()
  data = [[domain.zero] * n for _ in range(m)]
  r = c = 0
  for block in blocks:
    for i, row in enumerate(entries(block)):
      for j, value in enumerate(row):
        data[r + i][c + j] = value
    r += block.shape[0]
    c += block.shape[1]
  return DomainMatrix(data, (m, n), domain)


def transpose(A: DomainMatrix) -> DomainMatrix:
  m, n = A.shape
  if m == 0 or n == 0:
    return DomainMatrix.zeros((n, m), A.domain).to_dense()
  return A.transpose()


def determinant(A: DomainMatrix) -> object:
  n, n2 = A.shape
  assert n == n2, f"Determinant needs a square matrix! ({n} != {n2})"
  if n == 0:
    return A.domain.one
  return A.det()


def inverse(A: DomainMatrix) -> DomainMatrix:
  if A.shape[0] == 0:
    return A
  return A.inv()


def charpoly_factors(A: DomainMatrix) -> List[Tuple[List[object], int]]:
  """
  @brief Monic irreducible factors over Q of the characteristic polynomial of a rational square matrix
  @returns  List of (coefficients with the leading one first, multiplicity)
  """
  assert A.domain == QQ, "Characteristic polynomials are only factored over the rationals!"
  if A.shape[0] == 0:
    return []
  t = Symbol("t")
  _, factors = Poly([QQ.to_sympy(c) for c in A.charpoly()], t, domain=QQ).factor_list()
  result = []
  for factor, multiplicity in factors:
    monic = factor.monic()
    result.append(([QQ.from_sympy(c) for c in monic.all_coeffs()], multiplicity))
  return result


def poly_of_matrix(coeffs: Sequence[object], A: DomainMatrix) -> DomainMatrix:
  """Evaluates the polynomial with the given coefficients (leading one first) at a square matrix by Horner's rule"""
  n = A.shape[0]
  result = DomainMatrix.zeros((n, n), A.domain).to_dense()
  if n == 0:
    return result
  identity = DomainMatrix.eye(n, A.domain).to_dense()
  for c in coeffs:
    result = result * A + identity * c
  return result

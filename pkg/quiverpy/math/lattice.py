"""
@package quiverpy.math.lattice
@brief Integer lattice routines: extended gcd, Hermite echelon form and saturated integer kernels
@details Pure Python integers throughout. Row operations are unimodular, so every lattice passed through these
routines is preserved exactly.
@date 2026-10-16
"""
from typing import List, Sequence, Tuple


__all__ = ["xgcd", "hermite_rows", "integer_kernel"]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
  """
  @brief Extended Euclidean algorithm
  @returns  (x, y, g) with a*x + b*y = g and g >= 0
  """
  x0, y0, x1, y1 = 1, 0, 0, 1
  while b != 0:
    q, r = divmod(a, b)
    a, b = b, r
    x0, x1 = x1, x0 - q * x1
    y0, y1 = y1, y0 - q * y1
  if a < 0:
    return -x0, -y0, -a
  return x0, y0, a


def _eliminate(rows: List[List[int]], columns: int) -> int:
  """
  @brief Unimodular row echelon reduction restricted to the first `columns` entries
  @returns  Number of pivot rows. Rows after them are zero on the first `columns` entries
  """
  pivot_row = 0
  for col in range(columns):
    if pivot_row == len(rows):
      break
    for i in range(pivot_row + 1, len(rows)):
      b = rows[i][col]
      if b == 0:
        continue
      a = rows[pivot_row][col]
      if a == 0:
        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
        continue
      x, y, g = xgcd(a, b)
      top, bottom = rows[pivot_row], rows[i]
      rows[pivot_row] = [x * s + y * t for s, t in zip(top, bottom)]
      rows[i]         = [(a // g) * t - (b // g) * s for s, t in zip(top, bottom)]
    if rows[pivot_row][col] != 0:
      pivot_row += 1
  return pivot_row


def hermite_rows(vectors: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
  """
  @brief Hermite normal form basis of the lattice spanned by the vectors
  @details Pivots are positive and the entries above each pivot are reduced into [0, pivot)
  @param vectors  Integer vectors of equal length
  @returns        Basis rows, leading entries positive, zero rows dropped
  """
  if len(vectors) == 0:
    return []
  rows = [list(v) for v in vectors]
  n = len(rows[0])
  rank = _eliminate(rows, n)
  rows = rows[:rank]

  pivots = []
  for k, row in enumerate(rows):
    col = next(j for j, value in enumerate(row) if value != 0)
    if row[col] < 0:
      rows[k] = row = [-value for value in row]
    pivots.append(col)

  for k, col in enumerate(pivots):
    for above in range(k):
      q = rows[above][col] // rows[k][col]
      if q != 0:
        rows[above] = [s - q * t for s, t in zip(rows[above], rows[k])]
  return [tuple(row) for row in rows]


def integer_kernel(matrix: Sequence[Sequence[int]], n: int = None) -> List[Tuple[int, ...]]:
  """
  @brief Basis of the saturated lattice {x in Z^n : M x = 0}
  @details Each column of M is augmented with a unit vector and the augmented columns are reduced by unimodular
  operations on the M part. The unit parts of the rows whose M part vanished form a basis of the kernel lattice,
  which is then brought into Hermite form.
  @param matrix  Integer matrix given as rows
  @param n       Number of columns. Needed only when the matrix has no rows
  @returns       Kernel basis in Hermite form
  """
  m = len(matrix)
  if n is None:
    n = len(matrix[0]) if m > 0 else 0
  rows = [[matrix[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
  rank = _eliminate(rows, m)
  return hermite_rows([row[m:] for row in rows[rank:]])

"""
@package quiverpy.moment.LinearAction
@brief Linear actions of matrix Lie algebras on spaces of matrices
@details A basis element xi = (A, B) acts on an r x c matrix x by xi.x = A x - x B, and on the dual matrix y by
xi*.y = A^T y - y B^T.
@date 2026-10-16
"""
from __future__ import annotations
from typing import List, Sequence, Tuple
from sympy.polys.matrices import DomainMatrix

from ..exceptions import PolynomialError
from ..math import linalg
from ..math.Field import Field
from ..math.MultiPoly import matrix_variables


__all__ = ["LinearAction", "standard_symplectic_form", "block_symplectic_form"]


_QQ = Field.rationals()


def _unit(n: int, i: int, j: int) -> DomainMatrix:
  rows = [[0] * n for _ in range(n)]
  rows[i][j] = 1
  return linalg.matrix(rows, _QQ)


def standard_symplectic_form(n: int) -> DomainMatrix:
  """
  @brief The antidiagonal skew form J on Q^2n
  @details J_{i, 2n+1-i} = 1 for i <= n and -1 for i > n (1-based), so that J^2 = -1
  """
  size = 2 * n
  rows = [[0] * size for _ in range(size)]
  for i in range(size):
    rows[i][size - 1 - i] = 1 if i < n else -1
  return linalg.matrix(rows, _QQ)


def block_symplectic_form(n: int) -> DomainMatrix:
  """The skew form [[0, 1], [-1, 0]] in n x n blocks, pairing coordinate i with i + n"""
  size = 2 * n
  rows = [[0] * size for _ in range(size)]
  for i in range(n):
    rows[i][i + n] = 1
    rows[i + n][i] = -1
  return linalg.matrix(rows, _QQ)


class LinearAction:
  """
  @brief A Lie algebra of pairs (A, B) acting on r x c matrices
  @details The basis is checked to be linearly independent as a set of pairs. The action itself need not be
  faithful: for gl_r x gl_c the pair of identities acts trivially.
  """

  def __init__(self, rows: int, cols: int, basis: Sequence[Tuple[DomainMatrix, DomainMatrix]], name: str = "") -> None:
    """
    @brief Constructor
    @param rows              Rows of the matrix space
    @param cols              Columns of the matrix space
    @param basis             Pairs (A, B) with A rows x rows and B cols x cols over Q
    @param name              Display name
    @raises PolynomialError  Raised on shape mismatches or a linearly dependent basis
    @returns                 None
    """
    for A, B in basis:
      if A.shape != (rows, rows) or B.shape != (cols, cols):
        raise PolynomialError(f"Basis element has the wrong shape! ({A.shape}, {B.shape} != ({rows}, {rows}), ({cols}, {cols}))")

    if len(basis) > 0:
      flat = [[e for row in linalg.entries(A) for e in row] + [e for row in linalg.entries(B) for e in row]
              for A, B in basis]
      if linalg.rank(linalg.matrix(flat, _QQ)) != len(basis):
        raise PolynomialError(f"Basis of the Lie algebra is linearly dependent! ({name or 'unnamed'})")

    self.__rows  = rows
    self.__cols  = cols
    self.__basis = tuple(basis)
    self.__name  = name or f"action on {rows}x{cols}"


  @classmethod
  def gl_gl(cls, rows: int, cols: int) -> LinearAction:
    """gl_rows x gl_cols acting by left and right multiplication, unit matrices as basis"""
    basis  = [(_unit(rows, i, j), linalg.zeros(cols, cols, _QQ)) for i in range(rows) for j in range(rows)]
    basis += [(linalg.zeros(rows, rows, _QQ), _unit(cols, k, l)) for k in range(cols) for l in range(cols)]
    return cls(rows, cols, basis, f"gl_{rows} x gl_{cols}")


  @classmethod
  def sp_gl(cls, n: int, cols: int, form: DomainMatrix = None) -> LinearAction:
    """
    @brief sp_2n x gl_cols on 2n x cols matrices
    @details sp_2n is spanned by A = J^-1 S for S running over the symmetric unit matrices, so that J A = S
    @param n                 Half the number of rows
    @param cols              Number of columns
    @param form              The skew form J. Defaults to standard_symplectic_form(n)
    @raises PolynomialError  Raised if the form is not skew or is degenerate
    """
    size = 2 * n
    J    = standard_symplectic_form(n) if form is None else form
    if J.shape != (size, size) or not linalg.equal(J, -linalg.transpose(J)):
      raise PolynomialError(f"Form is not a skew {size} x {size} matrix! ({J.shape})")
    if linalg.determinant(J) == 0:
      raise PolynomialError("Form is degenerate! (det J = 0)")
    J_inv = linalg.inverse(J)
    basis = []
    for i in range(size):
      for j in range(i, size):
        S = _unit(size, i, j) if i == j else _unit(size, i, j) + _unit(size, j, i)
        A = linalg.matmul(J_inv, S)
        basis.append((A, linalg.zeros(cols, cols, _QQ)))
    basis += [(linalg.zeros(size, size, _QQ), _unit(cols, k, l)) for k in range(cols) for l in range(cols)]
    return cls(size, cols, basis, f"sp_{size} x gl_{cols}")


  @classmethod
  def zero(cls, rows: int, cols: int) -> LinearAction:
    """The zero Lie algebra"""
    return cls(rows, cols, [], f"0 on {rows}x{cols}")


  def __str__(self) -> str:
    """Simple string representation"""
    return f"{self.__name} on {self.__rows}x{self.__cols} matrices"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"{str(self)}\nLie algebra dimension: {self.dim}"


  def __len__(self) -> int:
    return len(self.__basis)


  @property
  def rows(self) -> int:
    return self.__rows


  @property
  def cols(self) -> int:
    return self.__cols


  @property
  def basis(self) -> Tuple[Tuple[DomainMatrix, DomainMatrix], ...]:
    """The basis pairs (A, B)"""
    return self.__basis


  @property
  def dim(self) -> int:
    """Dimension of the Lie algebra"""
    return len(self.__basis)


  @property
  def name(self) -> str:
    return self.__name


  @property
  def x_names(self) -> List[str]:
    """Coordinates x{i}_{j} on the matrix space"""
    return matrix_variables("x", self.__rows, self.__cols)


  @property
  def y_names(self) -> List[str]:
    """Dual coordinates y{i}_{j}"""
    return matrix_variables("y", self.__rows, self.__cols)


  def matrix(self, rows: Sequence[Sequence[object]]) -> DomainMatrix:
    """
    @brief A point of the matrix space as a rational matrix
    @raises PolynomialError  Raised if the shape does not match
    """
    shape = (len(rows), len(rows[0]) if len(rows) > 0 else 0)
    if shape != (self.__rows, self.__cols) or any(len(row) != self.__cols for row in rows):
      raise PolynomialError(f"Point has the wrong shape! ({shape} != ({self.__rows}, {self.__cols}))")
    return linalg.matrix(rows, _QQ, (self.__rows, self.__cols))


  def act(self, k: int, x: DomainMatrix) -> DomainMatrix:
    """xi_k . x = A x - x B"""
    A, B = self.__basis[k]
    return linalg.matmul(A, x) - linalg.matmul(x, B)


  def act_dual(self, k: int, y: DomainMatrix) -> DomainMatrix:
    """xi_k* . y = A^T y - y B^T"""
    A, B = self.__basis[k]
    return linalg.matmul(linalg.transpose(A), y) - linalg.matmul(y, linalg.transpose(B))

"""
@package quiverpy.reptype.TitsForm
@brief Tits quadratic forms of quivers with relations
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, List, Mapping, Sequence, Tuple
from fractions import Fraction
import logging
import numpy as np

from ..math.MultiPoly import MultiPoly
from ..math.lattice import integer_kernel
from ..quiver.QuiverPresentation import QuiverPresentation


__all__ = ["TitsForm", "tits_form"]


logger = logging.getLogger(__name__)


class TitsForm:
  """
  @brief Integral quadratic form q(x) = sum_{i <= j} Q_ij x_i x_j on vertex-indexed vectors
  @details Q is stored upper triangular, so Q_ii is the coefficient of x_i^2 and Q_ij, i < j, the coefficient of
  x_i x_j. The symmetric matrix S = Q + Q^T is the Gram matrix of 2q.
  """

  def __init__(self, vertices: Sequence[str], coefficients: np.ndarray) -> None:
    """
    @brief Constructor
    @param vertices      Vertex order of the coordinates
    @param coefficients  Upper triangular integer coefficient matrix
    @returns             None
    """
    Q = np.array(coefficients, dtype=int)
    assert Q.shape == (len(vertices), len(vertices)), f"Coefficient matrix does not match vertices! ({Q.shape})"
    assert not np.any(np.tril(Q, -1)), "Coefficient matrix must be upper triangular!"

    self.__vertices = tuple(vertices)
    self.__Q        = Q


  @classmethod
  def from_presentation(cls, pres: QuiverPresentation) -> TitsForm:
    """
    @brief The Tits form of a presentation
    @details q(x) = sum_v x_v^2 - sum_{arrows a} x_{ta} x_{ha} + sum_{relations r} x_{source r} x_{target r}, with
    the given relation set taken as the minimal relations. A relation from v back to v adds to the coefficient of
    x_v^2 and a loop at v subtracts from it
    """
    n = len(pres.vertices)
    Q = np.eye(n, dtype=int)
    index = pres.quiver.index
    for arrow in pres.arrows:
      i, j = sorted((index(arrow.tail), index(arrow.head)))
      Q[i, j] -= 1
    for relation in pres.relations:
      i, j = sorted((index(relation.source), index(relation.target)))
      Q[i, j] += 1
    return cls(pres.vertices, Q)


  @classmethod
  def from_terms(cls, vertices: Sequence[str], terms: Mapping[Tuple[str, str], int]) -> TitsForm:
    """Builds a form from coefficients keyed by vertex pairs, (v, v) for squares"""
    vertices = tuple(vertices)
    Q = np.zeros((len(vertices), len(vertices)), dtype=int)
    for (u, v), c in terms.items():
      i, j = sorted((vertices.index(u), vertices.index(v)))
      Q[i, j] += c
    return cls(vertices, Q)


  def __call__(self, x: Sequence[int]) -> int:
    """Value q(x)"""
    x = np.array(x, dtype=object)
    return int(x @ self.__Q.astype(object) @ x)


  def __str__(self) -> str:
    """Simple string representation"""
    return f"q(x) = {self.to_polynomial()}"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"TitsForm on {list(self.__vertices)}\n{self.__Q}"


  def __eq__(self, other: object) -> bool:
    if not isinstance(other, TitsForm):
      return NotImplemented
    return self.__vertices == other.vertices and np.array_equal(self.__Q, other.coefficients)


  def __hash__(self) -> int:
    return hash((self.__vertices, self.__Q.tobytes()))


  @property
  def vertices(self) -> Tuple[str, ...]:
    """Vertex order of the coordinates"""
    return self.__vertices


  @property
  def coefficients(self) -> np.ndarray:
    """Upper triangular coefficient matrix"""
    return self.__Q.copy()


  def terms(self) -> Dict[Tuple[str, str], int]:
    """Nonzero coefficients keyed by vertex pairs in vertex order"""
    n = len(self.__vertices)
    return {(self.__vertices[i], self.__vertices[j]): int(self.__Q[i, j])
            for i in range(n) for j in range(i, n) if self.__Q[i, j] != 0}


  def symmetric_matrix(self) -> np.ndarray:
    """Gram matrix S of 2q, i.e. 2q(x) = x^T S x"""
    return self.__Q + self.__Q.T


  def to_polynomial(self) -> str:
    """The form as a polynomial in x1, ..., xn (coordinates in vertex order)"""
    names = [f"x{k}" for k in range(1, len(self.__vertices) + 1)]
    n = len(names)
    terms = {}
    for i in range(n):
      for j in range(i, n):
        if self.__Q[i, j] != 0:
          exps = [0] * n
          exps[i] += 1
          exps[j] += 1
          terms[tuple(exps)] = int(self.__Q[i, j])
    return str(MultiPoly.from_terms(terms, names))


  def is_psd(self) -> bool:
    """
    @brief Positive semi-definiteness by exact symmetric pivoting
    @details Gaussian elimination on S with Fractions. A negative pivot, or a zero pivot whose row still has a
    nonzero entry, proves indefiniteness.
    """
    S = self.symmetric_matrix()
    n = len(self.__vertices)
    A = [[Fraction(int(S[i, j])) for j in range(n)] for i in range(n)]
    for k in range(n):
      pivot = A[k][k]
      if pivot < 0:
        return False
      if pivot == 0:
        if any(A[k][j] != 0 for j in range(k + 1, n)):
          return False
        continue
      for i in range(k + 1, n):
        factor = A[i][k] / pivot
        if factor != 0:
          for j in range(k, n):
            A[i][j] -= factor * A[k][j]
    return True


  def is_positive_definite(self) -> bool:
    return self.is_psd() and len(self.radical_lattice()) == 0


  def radical_lattice(self) -> List[Tuple[int, ...]]:
    """
    @brief Integer kernel of the symmetric matrix
    @details For a positive semi-definite form this is the lattice {x : q(x) = 0}
    @returns  Hermite basis with positive leading entries
    """
    S = self.symmetric_matrix()
    basis = integer_kernel([[int(S[i, j]) for j in range(S.shape[1])] for i in range(S.shape[0])], S.shape[1])
    logger.debug("Radical of rank %d", len(basis))
    return basis


def tits_form(pres: QuiverPresentation) -> TitsForm:
  """The Tits form of a presentation"""
  return TitsForm.from_presentation(pres)

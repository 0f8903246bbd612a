"""
Tests for the exact linear algebra helpers.

Core claims:
  - Shapes with a zero dimension behave like the corresponding zero maps
  - Kernels are returned in reduced form with respect to their free columns
  - Characteristic polynomials factor over the rationals
  - Matrix equality compares entries regardless of the storage format
"""
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from quiverpy.math import Field, linalg


# -- Helpers ------------------------------------------------------------------

Q = Field.rationals()


def _make(rows, field=Q):
  return linalg.matrix(rows, field)


def _python(A, field=Q):
  return linalg.to_python_rows(A, field)


class TestDegenerateShapes:

  def test_matmul_through_zero_inner_dimension(self):
    A = linalg.zeros(2, 0, Q)
    B = linalg.zeros(0, 3, Q)
    C = linalg.matmul(A, B)
    assert C.shape == (2, 3)
    assert linalg.is_zero(C)

  def test_rank_of_empty_matrix(self):
    assert linalg.rank(linalg.zeros(0, 3, Q)) == 0
    assert linalg.rank(linalg.zeros(3, 0, Q)) == 0

  def test_kernel_of_map_to_zero_space_is_everything(self):
    basis, free = linalg.kernel(linalg.zeros(0, 3, Q))
    assert free == (0, 1, 2)
    assert len(basis) == 3

  def test_kernel_of_map_from_zero_space(self):
    assert linalg.kernel(linalg.zeros(2, 0, Q)) == ([], ())

  def test_empty_identity_and_determinant(self):
    I = linalg.eye(0, Q)
    assert I.shape == (0, 0)
    assert linalg.determinant(I) == QQ.one

  def test_explicit_shape_for_row_free_matrix(self):
    assert linalg.matrix([], Q, (0, 4)).shape == (0, 4)


class TestKernelAndRank:

  def test_rank_one_kernel(self):
    basis, free = linalg.kernel(_make([[1, 2], [2, 4]]))
    assert free == (1,)
    assert [[Q.to_python(x) for x in v] for v in basis] == [[-2, 1]]

  def test_rank_over_prime_field(self):
    F2 = Field.prime(2)
    A = _make([[1, 1], [1, 1]], F2)
    assert linalg.rank(A) == 1
    assert linalg.rank(_make([[1, 1], [1, 3]], Q)) == 2
    assert linalg.rank(_make([[1, 1], [1, 3]], F2)) == 1

  def test_span_basis_coordinates(self):
    vectors = [[QQ(1), QQ(1), QQ(0)], [QQ(0), QQ(1), QQ(1)]]
    rows, pivots = linalg.span_basis(vectors, 3, QQ)
    assert pivots == (0, 1)
    target = [QQ(2), QQ(3), QQ(1)]
    assert [Q.to_python(x) for x in linalg.coordinates(target, pivots)] == [2, 3]
    assert len(rows) == 2


class TestMatrixAlgebra:

  def test_block_diagonal(self):
    A = _make([[1, 2]])
    B = _make([[3], [4]])
    D = linalg.block_diagonal([A, B], QQ)
    assert _python(D) == [[1, 2, 0], [0, 0, 3], [0, 0, 4]]

  def test_transpose_and_submatrix(self):
    A = _make([[1, 2, 3], [4, 5, 6]])
    assert _python(linalg.transpose(A)) == [[1, 4], [2, 5], [3, 6]]
    assert _python(linalg.submatrix(A, [1], [0, 2])) == [[4, 6]]

  def test_inverse(self):
    A = _make([[2, 1], [1, 1]])
    assert _python(linalg.matmul(A, linalg.inverse(A))) == [[1, 0], [0, 1]]

  def test_determinant_of_fractions(self):
    A = _make([["1/2", 0], [0, "2/3"]])
    assert Q.to_python(linalg.determinant(A)) == Fraction(1, 3)

  def test_charpoly_factors_of_swap(self):
    factors = linalg.charpoly_factors(_make([[0, 1], [1, 0]]))
    found = sorted((tuple(Q.to_python(c) for c in coeffs), mult) for coeffs, mult in factors)
    assert found == [((1, -1), 1), ((1, 1), 1)]

  def test_charpoly_factor_multiplicity(self):
    factors = linalg.charpoly_factors(_make([[0, 1], [0, 0]]))
    assert [(tuple(Q.to_python(c) for c in coeffs), mult) for coeffs, mult in factors] == [((1, 0), 2)]

  def test_polynomial_of_matrix_annihilates(self):
    A = _make([[0, 1], [1, 0]])
    assert linalg.is_zero(linalg.poly_of_matrix([QQ(1), QQ(0), QQ(-1)], A))


class TestEquality:

  def test_identity_equals_product_with_inverse(self):
    A = _make([[2, 1], [1, 1]])
    assert linalg.equal(linalg.eye(2, Q), linalg.matmul(A, linalg.inverse(A)))

  def test_storage_format_is_ignored(self):
    sparse = DomainMatrix.eye(3, QQ).to_sparse()
    assert linalg.equal(sparse, linalg.eye(3, Q))
    assert linalg.equal(linalg.eye(3, Q), sparse)

  def test_identity_is_idempotent_over_prime_field(self):
    F5 = Field.prime(5)
    I = linalg.eye(2, F5)
    assert linalg.equal(linalg.matmul(I, I), I)

  def test_different_entries_shapes_and_fields(self):
    assert not linalg.equal(_make([[1, 0], [0, 1]]), _make([[1, 0], [0, 2]]))
    assert not linalg.equal(linalg.zeros(2, 3, Q), linalg.zeros(3, 2, Q))
    assert not linalg.equal(linalg.eye(2, Q), linalg.eye(2, Field.prime(2)))

  def test_empty_matrices(self):
    assert linalg.equal(linalg.zeros(0, 3, Q), linalg.matrix([], Q, (0, 3)))

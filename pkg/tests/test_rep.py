"""
Tests for representations of quivers with relations.

Core claims:
  - Matrices of arrows t -> h have shape (dim h, dim t) and missing data means zero
  - Validation names the first relation whose composite does not vanish
  - Direct sums, duals, base changes and lifts keep the representation data consistent
"""
from fractions import Fraction

import pytest
from sympy.polys.matrices import DomainMatrix

from quiverpy.exceptions import RelationViolation, RepresentationError
from quiverpy.math import Field, linalg
from quiverpy.quiver import PathWord, make_AA
from quiverpy.rep import Rep


# -- Helpers ------------------------------------------------------------------

def _make_AA2(alpha=None, beta=None, field=None):
  """AA_2 with one-dimensional spaces"""
  maps = {}
  if alpha is not None:
    maps["alpha1"] = [[alpha]]
  if beta is not None:
    maps["beta1"] = [[beta]]
  return Rep(make_AA(2), {"(1)": 1, "(2)": 1}, maps, field)


class TestConstruction:

  def test_missing_data_is_zero(self):
    V = Rep(make_AA(3), {"(2)": 2})
    assert V.dim_vector == (0, 2, 0)
    assert V.matrix("alpha1").shape == (2, 0)
    assert linalg.is_zero(V.matrix("beta2"))
    assert V.field == Field.rationals()

  def test_unknown_vertex(self):
    with pytest.raises(RepresentationError):
      Rep(make_AA(2), {"(3)": 1})

  def test_negative_dimension(self):
    with pytest.raises(RepresentationError):
      Rep(make_AA(2), {"(1)": -1})

  def test_unknown_arrow(self):
    with pytest.raises(RepresentationError):
      Rep(make_AA(2), {"(1)": 1}, {"gamma": [[1]]})

  def test_shape_mismatch(self):
    with pytest.raises(RepresentationError):
      Rep(make_AA(2), {"(1)": 1, "(2)": 2}, {"alpha1": [[1, 0]]})

  def test_matrix_over_wrong_field(self):
    Q_matrix = linalg.matrix([[1]], Field.rationals())
    with pytest.raises(RepresentationError):
      Rep(make_AA(2), {"(1)": 1, "(2)": 1}, {"alpha1": Q_matrix}, Field.prime(2))

  def test_simple(self):
    S = Rep.simple(make_AA(3), "(2)")
    assert S.dim_vector == (0, 1, 0)
    assert S.total_dim == 1

  def test_rows_are_python_numbers(self):
    V = _make_AA2(alpha="1/2")
    assert V.rows("alpha1") == [[Fraction(1, 2)]]
    with pytest.raises(RepresentationError):
      V.rows("gamma")


class TestValidation:

  def test_string_module_is_valid(self):
    report = _make_AA2(alpha=1).validate()
    assert report
    assert report.ok
    assert str(report) == "ok"

  def test_first_violated_relation(self):
    report = _make_AA2(alpha=1, beta=1).validate()
    assert not report
    assert report.relation.arrows == ("alpha1", "beta1")

  def test_check_raises_with_relation(self):
    with pytest.raises(RelationViolation) as info:
      _make_AA2(alpha=1, beta=1).check()
    assert info.value.relation == ("alpha1", "beta1")

  def test_path_matrix(self):
    V = Rep(make_AA(3), {"(1)": 1, "(2)": 1, "(3)": 1}, {"alpha1": [[2]], "alpha2": [[3]]})
    path = PathWord(["alpha1", "alpha2"], "(1)", "(3)")
    assert linalg.to_python_rows(V.path_matrix(path), V.field) == [[6]]
    assert linalg.to_python_rows(V.path_matrix(PathWord.trivial("(2)")), V.field) == [[1]]


class TestOperations:

  def test_direct_sum_is_block_diagonal(self):
    V = _make_AA2(alpha=1) + _make_AA2(beta=1)
    assert V.dim_vector == (2, 2)
    assert V.rows("alpha1") == [[1, 0], [0, 0]]
    assert V.rows("beta1") == [[0, 0], [0, 1]]

  def test_direct_sum_needs_same_field(self):
    with pytest.raises(RepresentationError):
      _make_AA2(alpha=1).direct_sum(_make_AA2(alpha=1, field=Field.prime(2)))

  def test_direct_sum_needs_same_quiver(self):
    with pytest.raises(RepresentationError):
      _make_AA2(alpha=1).direct_sum(Rep.simple(make_AA(3), "(1)"))

  def test_dual_transposes(self):
    V = Rep(make_AA(2), {"(1)": 1, "(2)": 2}, {"alpha1": [[1], [2]]})
    D = V.dual()
    assert D.presentation == make_AA(2).opposite()
    assert D.rows("alpha1") == [[1, 2]]
    assert D.dual() == V

  def test_change_basis_conjugates(self):
    V = _make_AA2(alpha=1)
    Q = V.field
    W = V.change_basis({"(1)": linalg.matrix([[2]], Q), "(2)": linalg.matrix([[1]], Q)})
    assert W.rows("alpha1") == [[2]]

  def test_lift(self):
    V = _make_AA2(alpha=1, field=Field.prime(2))
    L = V.lift(Field.rationals())
    assert L.field == Field.rationals()
    assert L.rows("alpha1") == [[1]]

  def test_equality_is_data_equality(self):
    assert _make_AA2(alpha=1) == _make_AA2(alpha=1)
    assert _make_AA2(alpha=1) != _make_AA2(alpha=2)

  def test_equality_ignores_matrix_storage(self):
    Q = Field.rationals()
    sparse = DomainMatrix.eye(2, Q.domain).to_sparse()
    V = Rep(make_AA(2), {"(1)": 2, "(2)": 2}, {"alpha1": sparse}, Q)
    W = Rep(make_AA(2), {"(1)": 2, "(2)": 2}, {"alpha1": [[1, 0], [0, 1]]}, Q)
    assert V == W

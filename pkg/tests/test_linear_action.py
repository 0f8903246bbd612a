"""
Tests for linear actions on matrix spaces.

Core claims:
  - gl x gl and sp x gl come with bases of the right dimension
  - Symplectic forms must be skew and nondegenerate
  - Points and basis elements are shape checked
"""
import pytest

from quiverpy.exceptions import PolynomialError
from quiverpy.math import Field, linalg
from quiverpy.moment import LinearAction, block_symplectic_form, standard_symplectic_form


QQ = Field.rationals()


class TestForms:

  @pytest.mark.parametrize("form", [standard_symplectic_form, block_symplectic_form])
  def test_square_is_minus_one(self, form):
    J = form(2)
    assert linalg.equal(linalg.matmul(J, J), -linalg.eye(4, QQ))
    assert linalg.equal(J, -linalg.transpose(J))

  def test_standard_layout(self):
    assert linalg.entries(standard_symplectic_form(1)) == [[0, 1], [-1, 0]]
    assert linalg.entries(standard_symplectic_form(2))[1][2] == 1
    assert linalg.entries(block_symplectic_form(2))[1][3] == 1


class TestConstruction:

  @pytest.mark.parametrize("action, dim", [
    (LinearAction.gl_gl(2, 2), 8),
    (LinearAction.gl_gl(2, 3), 13),
    (LinearAction.sp_gl(2, 3), 19),
    (LinearAction.sp_gl(1, 1), 4),
    (LinearAction.zero(2, 2), 0),
  ])
  def test_dimension(self, action, dim):
    assert action.dim == dim
    assert len(action) == dim

  def test_block_form(self):
    action = LinearAction.sp_gl(2, 3, block_symplectic_form(2))
    assert action.dim == 19
    assert action.name == "sp_4 x gl_3"

  @pytest.mark.parametrize("form", [standard_symplectic_form(2), block_symplectic_form(2)])
  def test_symplectic_part_preserves_the_form(self, form):
    action = LinearAction.sp_gl(2, 1, form)
    for A, _ in action.basis[:10]:
      lhs = linalg.matmul(linalg.transpose(A), form)
      assert linalg.equal(lhs, -linalg.matmul(form, A))

  @pytest.mark.parametrize("form", [
    linalg.zeros(4, 4, QQ),
    linalg.eye(4, QQ),
    standard_symplectic_form(1),
  ])
  def test_bad_forms(self, form):
    with pytest.raises(PolynomialError):
      LinearAction.sp_gl(2, 3, form)

  def test_dependent_basis(self):
    I = linalg.eye(1, QQ)
    with pytest.raises(PolynomialError):
      LinearAction(1, 1, [(I, linalg.zeros(1, 1, QQ)), (I, linalg.zeros(1, 1, QQ))])

  def test_wrong_shape(self):
    with pytest.raises(PolynomialError):
      LinearAction(2, 2, [(linalg.eye(3, QQ), linalg.zeros(2, 2, QQ))])

  def test_variable_names(self):
    action = LinearAction.gl_gl(2, 2)
    assert action.x_names == ["x1_1", "x1_2", "x2_1", "x2_2"]
    assert action.y_names[-1] == "y2_2"


class TestAction:

  def test_left_and_right(self):
    action = LinearAction.gl_gl(1, 2)
    x = action.matrix([[1, 2]])
    assert linalg.entries(action.act(0, x)) == [[1, 2]]
    assert linalg.entries(action.act(2, x)) == [[0, -1]]

  def test_dual(self):
    action = LinearAction.gl_gl(2, 1)
    y = action.matrix([[3], [5]])
    assert linalg.entries(action.act_dual(1, y)) == [[0], [3]]

  @pytest.mark.parametrize("rows", [[[1, 2]], [[1], [2], [3]], []])
  def test_bad_point(self, rows):
    with pytest.raises(PolynomialError):
      LinearAction.gl_gl(2, 1).matrix(rows)

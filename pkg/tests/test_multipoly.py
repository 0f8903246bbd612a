"""
Tests for polynomials in named variables.

Core claims:
  - Arithmetic across different variable sets happens in the union ring
  - Evaluation is exact and requires every occurring variable
  - Term maps do not depend on the ambient ring
"""
from fractions import Fraction

import pytest

from quiverpy.exceptions import PolynomialError
from quiverpy.math import MultiPoly, matrix_variables


# -- Helpers ------------------------------------------------------------------

def _make_xy():
  return MultiPoly.variable("x"), MultiPoly.variable("y")


class TestArithmetic:

  def test_square_of_sum(self):
    x, y = _make_xy()
    p = (x + y) ** 2
    assert p.terms() == {(("x", 2),): 1, (("x", 1), ("y", 1)): 2, (("y", 2),): 1}
    assert p.names == ("x", "y")

  def test_equality_across_rings(self):
    x, _ = _make_xy()
    assert x == MultiPoly.variable("x", ["x", "y"])
    assert MultiPoly.constant(3) == 3
    assert x - x == 0

  def test_scalar_operations(self):
    x, _ = _make_xy()
    p = 2 * x + Fraction(1, 2)
    assert p.eval({"x": 1}) == Fraction(5, 2)
    assert (1 - x).eval({"x": 3}) == -2

  def test_from_terms_drops_zero_coefficients(self):
    p = MultiPoly.from_terms({(1, 0): 0, (0, 1): 3}, ["a", "b"])
    assert p.variables == ("b",)
    assert p.terms() == {(("b", 1),): 3}

  def test_zero(self):
    assert MultiPoly.from_terms({}, ["a"]).is_zero
    assert not MultiPoly.variable("a").is_zero


class TestCalculus:

  def test_diff(self):
    x, y = _make_xy()
    p = x ** 2 * y + y
    assert p.diff("x") == 2 * x * y
    assert p.diff("y") == x ** 2 + 1
    assert p.diff("z").is_zero

  def test_degree_in(self):
    x, y = _make_xy()
    p = x * y + x ** 3
    assert p.degree_in(["x"]) == (1, 3)
    assert p.degree_in(["y"]) == (0, 1)
    assert MultiPoly.constant(0).degree_in(["x"]) == (0, 0)


class TestEvaluation:

  def test_exact_value(self):
    x, y = _make_xy()
    assert ((x + y) ** 2).eval({"x": "1/2", "y": 1}) == Fraction(9, 4)

  def test_extra_keys_are_ignored(self):
    x, _ = _make_xy()
    assert x.eval({"x": 2, "unused": 7}) == 2

  def test_missing_variable(self):
    x, y = _make_xy()
    with pytest.raises(PolynomialError):
      (x * y).eval({"x": 1})


class TestMatrixVariables:

  def test_row_major_names(self):
    assert matrix_variables("x", 2, 2) == ["x1_1", "x1_2", "x2_1", "x2_2"]
    assert matrix_variables("y", 0, 3) == []

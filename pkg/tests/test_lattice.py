"""
Tests for the integer lattice routines.

Core claims:
  - xgcd returns Bezout coefficients and a nonnegative gcd
  - Hermite rows form a reduced basis of the same lattice
  - Integer kernels are saturated
"""
import pytest

from quiverpy.math import lattice


class TestXgcd:

  @pytest.mark.parametrize("a, b", [(240, 46), (-12, 18), (7, 0), (0, -5), (1, -1)])
  def test_bezout(self, a, b):
    x, y, g = lattice.xgcd(a, b)
    assert g >= 0
    assert a * x + b * y == g
    if g:
      assert a % g == 0 and b % g == 0


class TestHermite:

  def test_redundant_generators(self):
    assert lattice.hermite_rows([(2, 0), (0, 3), (2, 3)]) == [(2, 0), (0, 3)]

  def test_zero_rows_dropped(self):
    assert lattice.hermite_rows([(0, 0), (0, -2)]) == [(0, 2)]

  def test_empty(self):
    assert lattice.hermite_rows([]) == []


class TestIntegerKernel:

  def test_chain_of_differences(self):
    assert lattice.integer_kernel([[1, -1, 0], [0, 1, -1]]) == [(1, 1, 1)]

  def test_kernel_is_saturated(self):
    assert lattice.integer_kernel([[2, 4]]) == [(2, -1)]

  def test_no_rows_means_full_lattice(self):
    assert lattice.integer_kernel([], 2) == [(1, 0), (0, 1)]

  def test_injective_map_has_trivial_kernel(self):
    assert lattice.integer_kernel([[1, 0], [0, 1]]) == []

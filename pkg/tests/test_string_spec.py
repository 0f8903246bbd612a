"""
Tests for string labels of the chain quivers.

Core claims:
  - Intervals lie inside the chain and carry one sign per edge
  - Labels order by (n, i, j, signs) and print as I_{i,j}^{signs}
"""
import pytest

from quiverpy.exceptions import RepresentationError
from quiverpy.rep import StringSpec


class TestStringSpec:

  def test_label(self):
    spec = StringSpec(4, 2, 4, "+-")
    assert str(spec) == "I_{2,4}^{+-}"
    assert spec.dim_vector == (0, 1, 1, 1)

  def test_unicode_minus(self):
    assert StringSpec(3, 1, 2, "−") == StringSpec(3, 1, 2, "-")

  @pytest.mark.parametrize("n, i, j, signs", [(3, 0, 1, "+"), (3, 2, 1, ""), (3, 1, 4, "+++"), (3, 1, 2, ""),
                                              (3, 1, 2, "x"), (3, 1, 1, "+")])
  def test_invalid(self, n, i, j, signs):
    with pytest.raises(RepresentationError):
      StringSpec(n, i, j, signs)

  def test_ordering(self):
    specs = [StringSpec(3, 2, 2), StringSpec(3, 1, 2, "-"), StringSpec(3, 1, 2, "+"), StringSpec(3, 1, 1)]
    assert [str(s) for s in sorted(specs)] == ["I_{1,1}^{}", "I_{1,2}^{+}", "I_{1,2}^{-}", "I_{2,2}^{}"]

  def test_hashable(self):
    assert len({StringSpec(2, 1, 2, "+"), StringSpec(2, 1, 2, "+")}) == 1

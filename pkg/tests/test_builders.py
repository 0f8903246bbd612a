"""
Tests for the builtin quiver shapes.

Core claims:
  - Chains on arbitrary labels match the AA and AA^c shapes
  - Builtin names resolve and unknown names are rejected
"""
import pytest

from quiverpy.exceptions import QuiverError
from quiverpy.quiver import builtin_presentation, make_AA, make_AA3c, make_B8, make_chain, make_chain_c


class TestChains:

  def test_chain_on_labels(self):
    pres = make_chain(["(0)", "(1)", "(2)"])
    assert pres.quiver.arrow("(0)->(1)").head == "(1)"
    assert pres.is_isomorphic_to(make_AA(3))

  def test_chain_c_on_labels(self):
    assert make_chain_c(["p", "q", "r"]).is_isomorphic_to(make_AA3c())

  def test_single_vertex(self):
    pres = make_AA(1)
    assert pres.vertices == ("(1)",)
    assert pres.arrows == ()

  def test_empty_chain(self):
    with pytest.raises(QuiverError):
      make_AA(0)


class TestB8:

  def test_relations(self):
    pres = make_B8()
    assert len(pres.vertices) == 8
    assert [r.arrows for r in pres.relations] == [("a72", "a21"), ("a84", "a45")]


class TestBuiltinNames:

  @pytest.mark.parametrize("name, vertices", [("AA:4", 4), ("AA3c", 3), ("EE6", 6), ("B8", 8), ("B8op", 8)])
  def test_known(self, name, vertices):
    assert len(builtin_presentation(name).vertices) == vertices

  @pytest.mark.parametrize("name", ["AA:x", "AA:0", "E7", ""])
  def test_unknown(self, name):
    with pytest.raises(QuiverError):
      builtin_presentation(name)

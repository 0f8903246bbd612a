"""
Tests for quivers and paths.

Core claims:
  - Vertex and arrow ids are unique and arrows only join known vertices
  - Paths compose tail-to-head and carry their endpoints
  - The opposite quiver reverses every arrow and keeps the ids
"""
import pytest

from quiverpy.exceptions import QuiverError
from quiverpy.quiver import PathWord, Quiver, compose


# -- Helpers ------------------------------------------------------------------

def _make_triangle():
  """x -> y -> z -> x"""
  return Quiver(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")])


class TestPathWord:

  def test_trivial_path(self):
    e = PathWord.trivial("x")
    assert e.is_trivial
    assert len(e) == 0
    assert str(e) == "ex"

  def test_trivial_path_needs_equal_endpoints(self):
    with pytest.raises(QuiverError):
      PathWord([], "x", "y")

  def test_compose(self):
    p = PathWord(["a"], "x", "y")
    q = PathWord(["b"], "y", "z")
    assert compose(p, q) == PathWord(["a", "b"], "x", "z")
    assert str(p.compose(q)) == "ab"

  def test_compose_mismatch(self):
    with pytest.raises(QuiverError):
      PathWord(["a"], "x", "y").compose(PathWord(["c"], "z", "x"))

  def test_contains_subword(self):
    path = PathWord(["a", "b", "c"], "x", "x")
    assert path.contains(PathWord(["b", "c"], "y", "x"))
    assert not path.contains(PathWord(["a", "c"], "x", "x"))
    assert not path.contains(PathWord.trivial("x"))

  def test_reversed(self):
    assert PathWord(["a", "b"], "x", "z").reversed() == PathWord(["b", "a"], "z", "x")

  def test_multi_character_ids_are_spaced(self):
    assert str(PathWord(["alpha1", "alpha2"], "(1)", "(3)")) == "alpha1 alpha2"


class TestQuiver:

  def test_ids_become_strings(self):
    quiver = Quiver([1, 2], [("a", 1, 2)])
    assert quiver.vertices == ("1", "2")
    assert quiver.arrow("a").head == "2"

  def test_duplicate_vertices(self):
    with pytest.raises(QuiverError):
      Quiver(["x", "x"], [])

  def test_duplicate_arrows(self):
    with pytest.raises(QuiverError):
      Quiver(["x", "y"], [("a", "x", "y"), ("a", "y", "x")])

  def test_unknown_endpoint(self):
    with pytest.raises(QuiverError):
      Quiver(["x"], [("a", "x", "y")])

  def test_lookup_errors(self):
    quiver = _make_triangle()
    with pytest.raises(QuiverError):
      quiver.arrow("d")
    with pytest.raises(QuiverError):
      quiver.index("w")

  def test_path_builder(self):
    quiver = _make_triangle()
    path = quiver.path(["a", "b", "c"])
    assert (path.source, path.target) == ("x", "x")
    assert quiver.path([], "y") == PathWord.trivial("y")

  def test_path_builder_rejects_gaps(self):
    quiver = _make_triangle()
    with pytest.raises(QuiverError):
      quiver.path(["a", "c"])
    with pytest.raises(QuiverError):
      quiver.path([])

  def test_validate_path_checks_endpoints(self):
    with pytest.raises(QuiverError):
      _make_triangle().validate_path(PathWord(["a"], "x", "z"))

  def test_multiplicities(self):
    quiver = Quiver(["x", "y"], [("a", "x", "y"), ("b", "x", "y"), ("c", "y", "x")])
    assert quiver.multiplicities() == {("x", "y"): 2, ("y", "x"): 1}
    assert [a.id for a in quiver.outgoing("x")] == ["a", "b"]
    assert [a.id for a in quiver.incoming("x")] == ["c"]

  def test_opposite(self):
    opposite = _make_triangle().opposite()
    assert opposite.arrow("a").tail == "y"
    assert opposite.arrow("a").head == "x"
    assert opposite.opposite() == _make_triangle()

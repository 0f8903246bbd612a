"""
Tests for quivers with monomial relations.

Core claims:
  - A path is zero iff it contains a relation as a contiguous subword
  - Infinite dimensional quiver algebras are rejected at construction
  - The Cartan matrix counts nonzero paths between vertices
  - Isomorphisms must carry relations onto relations
"""
import numpy as np
import pytest

from quiverpy.exceptions import QuiverError
from quiverpy.quiver import PathWord, Quiver, QuiverPresentation, make_AA, make_AA3c, make_B8, make_B8_opposite, \
  make_EE6


# -- Helpers ------------------------------------------------------------------

def _make_two_cycle(relations):
  """x -a-> y -b-> x"""
  return QuiverPresentation(Quiver(["x", "y"], [("a", "x", "y"), ("b", "y", "x")]), relations)


def _make_loop(relations):
  return QuiverPresentation(Quiver(["x"], [("l", "x", "x")]), relations)


class TestFiniteness:

  def test_free_loop_is_infinite(self):
    with pytest.raises(QuiverError):
      _make_loop([])

  def test_nilpotent_loop(self):
    pres = _make_loop([["l", "l"]])
    assert len(pres.nonzero_paths()) == 2

  def test_free_two_cycle_is_infinite(self):
    with pytest.raises(QuiverError):
      _make_two_cycle([])

  def test_one_sided_two_cycle_is_finite(self):
    pres = _make_two_cycle([["a", "b"]])
    assert sorted(str(p) for p in pres.nonzero_paths()) == ["a", "b", "ba", "ex", "ey"]

  def test_longer_relations_are_pumped_through_their_window(self):
    pres = _make_loop([["l", "l", "l"]])
    assert [len(p) for p in pres.nonzero_paths()] == [0, 1, 2]


class TestRelations:

  def test_short_relation_rejected(self):
    with pytest.raises(QuiverError):
      _make_two_cycle([["a"]])

  def test_non_composable_relation_rejected(self):
    with pytest.raises(QuiverError):
      _make_two_cycle([["a", "a"]])

  def test_duplicates_collapse(self):
    pres = _make_two_cycle([["a", "b"], ["a", "b"], ["b", "a"]])
    assert len(pres.relations) == 2

  def test_zero_paths(self):
    pres = _make_two_cycle([["a", "b"], ["b", "a"]])
    assert pres.is_zero_path(PathWord(["a", "b"], "x", "x"))
    assert not pres.is_zero_path(PathWord(["a"], "x", "y"))

  def test_zero_path_outside_quiver(self):
    pres = _make_two_cycle([["a", "b"], ["b", "a"]])
    with pytest.raises(QuiverError):
      pres.is_zero_path(PathWord(["a"], "y", "x"))


class TestCartan:

  @pytest.mark.parametrize("n", range(1, 7))
  def test_AA_has_one_path_between_any_vertices(self, n):
    pres = make_AA(n)
    assert len(pres.nonzero_paths()) == n * n
    assert np.array_equal(pres.cartan_matrix(), np.ones((n, n), dtype=int))

  def test_AA3c(self):
    assert make_AA3c().cartan_matrix().tolist() == [[1, 1, 0], [1, 1, 1], [0, 1, 1]]

  def test_paths_between(self):
    paths = make_AA(3).paths_between("(1)", "(3)")
    assert [p.arrows for p in paths] == [("alpha1", "alpha2")]

  def test_paths_are_ordered_by_length(self):
    lengths = [len(p) for p in make_EE6().nonzero_paths()]
    assert lengths == sorted(lengths)

  def test_EE6_shape(self):
    pres = make_EE6()
    assert len(pres.vertices) == 6
    assert len(pres.arrows) == 10
    assert len(pres.relations) == 14
    assert pres.cartan_matrix().max() <= 1


class TestOperations:

  def test_opposite_reverses_relations(self):
    pres = _make_two_cycle([["a", "b"]])
    assert pres.opposite().relations == (PathWord(["b", "a"], "x", "x"),)

  def test_relabel(self):
    pres = make_AA(2).relabel({"(1)": "p"})
    assert pres.vertices == ("p", "(2)")
    assert pres.quiver.arrow("alpha1").tail == "p"

  def test_disjoint_union_and_components(self):
    pres = make_AA(2).disjoint_union(QuiverPresentation.isolated(["z"]))
    assert pres.vertices == ("(1)", "(2)", "z")
    assert pres.connected_components() == [frozenset({"(1)", "(2)"}), frozenset({"z"})]

  def test_disjoint_union_overlap(self):
    with pytest.raises(QuiverError):
      make_AA(2).disjoint_union(make_AA(2))


class TestIsomorphism:

  @pytest.mark.parametrize("builder", [lambda: make_AA(4), make_AA3c, make_EE6])
  def test_self_opposite_shapes(self, builder):
    assert builder().is_self_opposite()

  def test_B8_is_not_self_opposite(self):
    assert not make_B8().is_self_opposite()
    assert make_B8_opposite().is_isomorphic_to(make_B8().opposite())

  def test_relations_matter(self):
    assert not make_AA(3).is_isomorphic_to(make_AA3c())

  def test_relabeled_copy_is_isomorphic(self):
    pres = make_AA(3)
    vmap, amap = pres.find_isomorphism(pres.relabel({"(1)": "a", "(2)": "b", "(3)": "c"}))
    assert set(vmap.values()) == {"a", "b", "c"}
    assert len(amap) == 4

  def test_reflection_is_an_automorphism(self):
    pres = make_AA(3)
    assert pres.is_automorphism({"(1)": "(3)", "(2)": "(2)", "(3)": "(1)"})
    assert not pres.is_automorphism({"(1)": "(2)", "(2)": "(1)", "(3)": "(3)"})

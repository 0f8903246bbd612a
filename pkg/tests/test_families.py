"""
Tests for the atlas records.

Core claims:
  - Orbit codimensions follow the closed formulas of each family
  - Quivers have one simple per orbit and local system, with the stored chain shapes
  - Semi-invariants carry deg f distinct b-function roots
  - Records render to stable text and to the extended quiver file schema
"""
from fractions import Fraction

import pytest

from quiverpy.atlas import CaseId, get_case, list_cases, sp_gl_codim, sp_gl_labels
from quiverpy.atlas.CaseRecord import normalize_label
from quiverpy.exceptions import AtlasError
from quiverpy.quiver import QuiverPresentation, make_AA, make_AA3c, make_EE6


# -- Helpers ------------------------------------------------------------------

def _components(record):
  return {frozenset(c) for c in record.quiver.connected_components()}


class TestLabels:

  @pytest.mark.parametrize("label, printed", [(3, "(3)"), ((2, 0), "(2,0)"), ("( 1, 0 )", "(1,0)"), ("(2)'", "(2)'")])
  def test_normalize(self, label, printed):
    assert normalize_label(label) == printed

  def test_sp_gl_labels(self):
    assert sp_gl_labels(2, 3) == [(0, 0), (1, 0), (2, 0), (2, 2), (3, 2)]
    assert sp_gl_labels(2, 4)[-1] == (4, 4)

  def test_sp_gl_codim(self):
    assert sp_gl_codim(2, 3, 2, 0) == 3
    assert sp_gl_codim(2, 5, 1, 0) == 12
    with pytest.raises(AtlasError):
      sp_gl_codim(2, 3, 3, 0)


class TestGeneralLinear:

  def test_square(self):
    record = get_case(CaseId("gl_m_gl_n", m=3, n=3))
    assert [o.codim for o in record.orbits] == [9, 4, 1, 0]
    assert record.quiver.is_isomorphic_to(make_AA(4))
    assert record.semi_invariant.roots == (-1, -2, -3)
    assert record.fourier_complete
    assert record.fourier["(0)"] == "(3)"

  def test_rectangular_is_semisimple(self):
    record = get_case(CaseId("gl_m_gl_n", m=3, n=2))
    assert record.isolated_vertices() == ["(0)", "(1)", "(2)"]
    assert record.semi_invariant is None
    assert not record.fourier_complete
    assert record.fourier == {"(0)": "(2)", "(2)": "(0)"}


class TestSymmetric:

  def test_n3_components(self):
    record = get_case(CaseId("symmetric", n=3))
    assert len(record.quiver.vertices) == 7
    assert _components(record) == {frozenset({"(0)", "(2)", "(3)"}), frozenset({"(1)'", "(3)'"}),
                                   frozenset({"(1)"}), frozenset({"(2)'"})}

  def test_n4(self):
    record = get_case(CaseId("symmetric", n=4))
    assert len(record.quiver.vertices) == 9
    assert len(record.semi_invariant.roots) == 4
    assert record.semi_invariant.roots[-1] == Fraction(-5, 2)

  def test_sign_local_systems(self):
    record = get_case(CaseId("symmetric", n=2))
    assert record.local_system("(1)'") == ("(1)", "sign")
    assert record.vertex_orbit("(2)'").label == "(2)"
    assert record.orbit(0).component_group == 1


class TestSkew:

  def test_even(self):
    record = get_case(CaseId("skew", n=6))
    assert [o.codim for o in record.orbits] == [15, 6, 1, 0]
    assert record.semi_invariant.roots == (-1, -3, -5)
    assert record.quiver.is_isomorphic_to(make_AA(4))

  def test_odd(self):
    record = get_case(CaseId("skew", n=5))
    assert record.semi_invariant is None
    assert len(record.isolated_vertices()) == 3


class TestSymplectic:

  def test_sp2n_gl3_n3_codims(self):
    record = get_case(CaseId("sp2n_gl3", n=3))
    codims = [record.orbit(label).codim for label in ("(0,0)", "(1,0)", "(2,0)", "(2,2)", "(3,0)", "(3,2)")]
    assert codims == [18, 10, 5, 4, 3, 0]
    assert record.semi_invariant is None

  def test_sp2n_gl3_n2_is_AA3c(self):
    record = get_case(CaseId("sp2n_gl3", n=2))
    assert record.orbit("(2,0)").codim == 3
    assert sorted(record.isolated_vertices()) == ["(0,0)", "(3,2)"]
    assert record.quiver.is_isomorphic_to(make_AA3c().disjoint_union(QuiverPresentation.isolated(["p", "q"])))

  def test_sp4_gl4_is_EE6(self):
    record = get_case(CaseId("sp4_gl4"))
    assert record.quiver.is_isomorphic_to(make_EE6())
    assert record.semi_invariant.roots == (-1, -2, -3, -4)

  def test_sp2n_gl2(self):
    record = get_case(CaseId("sp2n_gl2", n=3))
    assert record.isolated_vertices() == ["(1,0)"]
    assert record.semi_invariant.roots == (-1, -6)

  def test_sp4_glm(self):
    record = get_case(CaseId("sp4_glm", m=5))
    assert record.orbit("(1,0)").codim == 12
    assert len(record.isolated_vertices()) == 4

  def test_closure_order_is_componentwise(self):
    record = get_case(CaseId("sp2n_gl3", n=3))
    assert record.is_below("(2,0)", "(3,0)")
    assert record.is_below((1, 0), (3, 2))
    assert not record.is_below("(2,2)", "(3,0)")

  def test_sp_2n(self):
    record = get_case(CaseId("sp_2n", n=2))
    assert record.fourier == {"(0)": "(1)", "(1)": "(0)"}
    assert record.isolated_vertices() == ["(0)", "(1)"]


class TestExceptional:

  def test_e6(self):
    record = get_case(CaseId("e6"))
    assert len(record.semi_invariant.roots) == 3
    assert record.quiver.is_isomorphic_to(make_AA(4))

  @pytest.mark.parametrize("family, dim", [("spin7", 8), ("g2", 7)])
  def test_orthogonal_shapes(self, family, dim):
    record = get_case(CaseId(family))
    assert record.dim_space == dim
    assert len(record.quiver.vertices) == 4
    assert "derived" in " ".join(record.notes)

  def test_spin9_and_spin10(self):
    assert len(get_case(CaseId("spin9")).quiver.vertices) == 5
    assert get_case(CaseId("spin10")).isolated_vertices() == ["(0)", "(1)", "(2)"]


class TestRendering:

  def test_text(self):
    text = get_case(CaseId("sp2n_gl3", n=2)).to_text()
    assert text.startswith("case: sp2n_gl3(n=2)")
    assert "(1,0) -> (2,0)" in text
    assert "fourier (complete): " in text

  def test_dict(self):
    data = get_case(CaseId("symmetric", n=2)).to_dict()
    assert data["case"] == {"family": "symmetric", "n": 2, "m": None}
    assert data["semi_invariant"]["roots"] == ["-1", "-3/2"]
    assert set(data) >= {"vertices", "arrows", "relations", "orbits", "covers", "fourier", "notes"}

  def test_list_cases(self):
    assert [t.family for t in list_cases()][:3] == ["gl_m_gl_n", "skew", "symmetric"]

  def test_unknown_lookups(self):
    record = get_case(CaseId("e6"))
    with pytest.raises(AtlasError):
      record.orbit("(7)")
    with pytest.raises(AtlasError):
      record.local_system("(7)")

  def test_not_a_case_id(self):
    with pytest.raises(AtlasError):
      get_case("e6")

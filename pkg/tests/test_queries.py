"""
Tests for atlas queries.

Core claims:
  - Codimension lookups accept printed labels, pairs and integers
  - Fourier data descends to the orbit pairing
  - Characteristic cycles are conormals of the supporting orbit where known
  - Projective covers are rows of the Cartan matrix
"""
import pytest

from quiverpy.atlas import (CaseId, characteristic_cycle, fourier_permutation, orbit_codim, projective_cover_dims,
                            pyasetskii)
from quiverpy.exceptions import AtlasError


SP6_GL3 = CaseId("sp2n_gl3", n=3)


class TestOrbitCodim:

  @pytest.mark.parametrize("case, label, codim", [
    (CaseId("sp2n_gl3", n=2), "(2,0)", 3),
    (CaseId("sp2n_gl3", n=2), (2, 0), 3),
    (CaseId("sp4_glm", m=5), "(1,0)", 12),
    (CaseId("gl_m_gl_n", m=4, n=2), 1, 3),
    (CaseId("e6"), "(1)", 10),
  ])
  def test_values(self, case, label, codim):
    assert orbit_codim(case, label) == codim

  @pytest.mark.parametrize("label", ["(3,0)", (1, 1), "(9)"])
  def test_inadmissible(self, label):
    with pytest.raises(AtlasError):
      orbit_codim(CaseId("sp2n_gl3", n=2), label)


class TestFourier:

  def test_permutation_is_an_involution(self):
    F = fourier_permutation(SP6_GL3)
    assert F["(3,0)"] == "(2,0)"
    assert all(F[F[v]] == v for v in F)

  def test_not_stored(self):
    assert fourier_permutation(CaseId("e6")) is None
    assert pyasetskii(CaseId("e6")) is None

  def test_pyasetskii(self):
    pairing = pyasetskii(SP6_GL3)
    assert pairing == {"(3,2)": "(0,0)", "(0,0)": "(3,2)", "(2,2)": "(1,0)", "(1,0)": "(2,2)",
                       "(3,0)": "(2,0)", "(2,0)": "(3,0)"}

  def test_pyasetskii_forgets_local_systems(self):
    assert pyasetskii(CaseId("symmetric", n=2)) == {"(2)": "(0)", "(0)": "(2)"}


class TestCharacteristicCycle:

  def test_known_for_sp6_gl3(self):
    cycle = characteristic_cycle(SP6_GL3, "(2,2)")
    assert cycle.known
    assert cycle.components == {"(2,2)": 1}
    assert str(cycle) == "[T*_(2,2) X]"

  def test_undetermined_middle_vertex(self):
    cycle = characteristic_cycle(CaseId("sp4_gl4"), "(2,0)")
    assert not cycle.known
    assert cycle.multiplicity_free
    assert cycle.components == {}
    assert str(cycle) == "multiplicity-free, components undetermined"

  def test_zero_orbit_contributes(self):
    cycle = characteristic_cycle(CaseId("sp4_gl4"), (0, 0))
    assert not cycle.known
    assert cycle.components == {"(0,0)": 1}
    assert "contains [T*_(0,0) X]" in str(cycle)

  def test_sign_simple_on_open_orbit(self):
    assert characteristic_cycle(CaseId("so_n", n=4), "(2)'").components == {}
    assert characteristic_cycle(CaseId("so_n", n=4), "(2)").components == {"(2)": 1}

  def test_unknown_vertex(self):
    with pytest.raises(AtlasError):
      characteristic_cycle(SP6_GL3, "(4,0)")


class TestProjectiveCover:

  def test_AA3c_cover_has_length_two(self):
    dims = projective_cover_dims(CaseId("sp2n_gl3", n=2), "(2,2)")
    assert sum(dims.values()) == 2
    assert dims["(2,0)"] == 1
    assert dims["(2,2)"] == 1

  def test_middle_of_square_chain(self):
    dims = projective_cover_dims(CaseId("gl_m_gl_n", m=2, n=2), "(1)")
    assert dims == {"(0)": 1, "(1)": 1, "(2)": 1}

  def test_isolated(self):
    dims = projective_cover_dims(CaseId("spin10"), 1)
    assert dims == {"(0)": 0, "(1)": 1, "(2)": 0}

  def test_unknown_vertex(self):
    with pytest.raises(AtlasError):
      projective_cover_dims(CaseId("spin10"), "(5)")

"""
Tests for the representation file format.

Core claims:
  - Quivers may be inline, builtin references or paths relative to the representation file
  - Entries are integers or 'num/den' strings over Q and integers in 0..p-1 over F_p
  - Malformed data raises FormatError, inconsistent shapes raise RepresentationError
"""
import json
from fractions import Fraction

import pytest

from quiverpy.exceptions import FormatError, RepresentationError
from quiverpy.math import Field
from quiverpy.quiver import make_AA
from quiverpy.quiver.io import dump_presentation
from quiverpy.rep import Rep
from quiverpy.rep.io import dump_rep, load_rep, rep_from_dict, rep_to_dict


# -- Helpers ------------------------------------------------------------------

def _make_data(**overrides):
  data = {
    "quiver" : "builtin:AA:2",
    "field"  : "Q",
    "dims"   : {"(1)": 1, "(2)": 1},
    "maps"   : {"alpha1": [["1/2"]]}
  }
  data.update(overrides)
  return data


class TestParsing:

  def test_builtin_reference(self):
    V = rep_from_dict(_make_data())
    assert V.presentation == make_AA(2)
    assert V.rows("alpha1") == [[Fraction(1, 2)]]

  def test_field_defaults_to_rationals(self):
    data = _make_data()
    del data["field"]
    assert rep_from_dict(data).field == Field.rationals()

  def test_prime_field(self):
    V = rep_from_dict(_make_data(field="Fp:3", maps={"beta1": [[2]]}))
    assert V.rows("beta1") == [[2]]

  def test_inline_quiver(self):
    quiver = {"vertices": ["x", "y"], "arrows": [{"id": "a", "tail": "x", "head": "y"}]}
    V = rep_from_dict(_make_data(quiver=quiver, dims={"x": 1, "y": 2}, maps={"a": [[1], [0]]}))
    assert V.dim_vector == (1, 2)

  @pytest.mark.parametrize("data", [
    "not an object",
    {"dims": {}},
    _make_data(quiver="builtin:E9"),
    _make_data(quiver=7),
    _make_data(field="R"),
    _make_data(dims={"(1)": "one"}),
    _make_data(maps=[["1"]]),
    _make_data(maps={"alpha1": [1]}),
    _make_data(maps={"alpha1": [["x/y"]]}),
    _make_data(maps={"alpha1": [[0.5]]}),
    _make_data(maps={"alpha1": [[True]]}),
    _make_data(field="Fp:3", maps={"alpha1": [[3]]}),
    _make_data(field="Fp:3", maps={"alpha1": [["1"]]}),
  ])
  def test_malformed(self, data):
    with pytest.raises(FormatError):
      rep_from_dict(data)

  def test_shape_mismatch(self):
    with pytest.raises(RepresentationError):
      rep_from_dict(_make_data(maps={"alpha1": [[1, 2]]}))


class TestFiles:

  def test_relative_quiver_path(self, tmp_path):
    dump_presentation(make_AA(3), str(tmp_path / "aa3.json"))
    (tmp_path / "rep.json").write_text(json.dumps(_make_data(quiver="aa3.json", dims={"(3)": 1}, maps={})),
                                       encoding="utf-8")
    V = load_rep(str(tmp_path / "rep.json"))
    assert V.dim_vector == (0, 0, 1)

  def test_write_then_read(self, tmp_path):
    V = Rep(make_AA(2), {"(1)": 1, "(2)": 2}, {"alpha1": [["2/3"], [1]]})
    path = tmp_path / "rep.json"
    dump_rep(V, str(path), "builtin:AA:2")
    assert load_rep(str(path)) == V

  def test_zero_sized_maps_are_omitted(self):
    data = rep_to_dict(Rep(make_AA(2), {"(1)": 1}))
    assert data["maps"] == {}
    assert data["quiver"]["vertices"] == ["(1)", "(2)"]

  def test_rational_entries_as_strings(self):
    data = json.loads(dump_rep(Rep(make_AA(2), {"(1)": 1, "(2)": 1}, {"alpha1": [["-3/4"]]})))
    assert data["maps"]["alpha1"] == [["-3/4"]]

  def test_unreadable(self, tmp_path):
    with pytest.raises(FormatError):
      load_rep(str(tmp_path / "missing.json"))

  def test_file_that_is_not_utf8(self, tmp_path):
    path = tmp_path / "rep.json"
    path.write_bytes(b"\xff\xfe{}")
    with pytest.raises(FormatError):
      load_rep(str(path))

"""
Tests for the verification suites.

Core claims:
  - Every suite passes
  - Unknown suite names raise KeyError
  - Results render as text and as dictionaries
"""
import pytest

from quiverpy.verify import B8_RADICAL, B8_TERMS, SUITES, Check, SuiteResult, run_suite, suite_atlas, suite_moment, \
  suite_tits


class TestSuites:

  def test_names(self):
    assert list(SUITES) == ["quivers", "strings", "tits", "atlas", "moment", "lemma-m2"]

  @pytest.mark.parametrize("name", ["quivers", "strings", "lemma-m2"])
  def test_passes(self, name):
    result = run_suite(name)
    assert result
    assert result.name == name

  def test_tits(self):
    result = suite_tits(samples=200, seed=1)
    assert result
    assert "radical multiples" in [c.name for c in result.checks]

  def test_atlas_small_grid(self):
    result = suite_atlas(range(2, 4))
    assert result, result.to_text()

  def test_moment(self):
    assert suite_moment(count=3)

  def test_unknown(self):
    with pytest.raises(KeyError):
      run_suite("everything")

  def test_b8_constants(self):
    assert len(B8_TERMS) == 17
    assert sum(B8_RADICAL) == 16


class TestSuiteResult:

  def test_failing(self):
    result = SuiteResult("demo", [Check("good", True), Check("bad", False, "off by one")])
    assert not result
    assert str(result) == "demo: FAIL (1/2)"
    assert result.to_text().splitlines() == ["demo: FAIL (1/2)", "  PASS good", "  FAIL bad: off by one"]

  def test_dict(self):
    data = SuiteResult("demo", [Check("good", True)]).to_dict()
    assert data == {"suite": "demo", "passed": True, "checks": [{"name": "good", "passed": True, "detail": ""}]}

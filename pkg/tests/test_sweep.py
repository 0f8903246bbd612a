"""
Tests for rank sweeps.

Core claims:
  - Sample points are deterministic in the seed
  - Jacobian and orbit tangent ranks agree at every sample point of the standard actions
"""
import pytest

from quiverpy.moment import LinearAction, RankRecord, rank_sweep, sample_points, standard_actions


class TestSweep:

  def test_samples_are_deterministic(self):
    action = LinearAction.gl_gl(2, 2)
    assert sample_points(action, 5, seed=3) == sample_points(action, 5, seed=3)
    assert len(sample_points(action, 5)) == 5

  def test_standard_actions(self):
    assert [a.name for a in standard_actions()] == ["gl_2 x gl_2", "gl_2 x gl_3", "sp_4 x gl_3"]

  @pytest.mark.parametrize("action", standard_actions(), ids=lambda a: a.name)
  def test_ranks_agree(self, action):
    records = rank_sweep(action, count=5, seed=1)
    assert len(records) == 5
    assert all(r.equal for r in records)
    assert [r.index for r in records] == list(range(5))

  def test_record_equality(self):
    assert RankRecord(0, 3, 3).equal
    assert not RankRecord(1, 3, 2).equal

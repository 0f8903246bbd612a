"""
@package quiverpy.moment.sweep
@brief Rank equality sweeps over deterministic rational sample points
@date 2026-10-16
"""
from typing import List, NamedTuple, Tuple
from fractions import Fraction
import logging
import random

from .LinearAction import LinearAction
from .MomentSystem import MomentSystem


__all__ = ["RankRecord", "sample_points", "rank_sweep", "standard_actions"]


logger = logging.getLogger(__name__)


class RankRecord(NamedTuple):
  index: int
  jacobian: int
  orbit: int

  @property
  def equal(self) -> bool:
    return self.jacobian == self.orbit


def sample_points(action: LinearAction, count: int, seed: int = 0) -> List[Tuple[List[List[Fraction]], List[List[Fraction]]]]:
  """
  @brief Deterministic rational points (x, y) of the cotangent space
  @details Entries are p / q with -5 <= p <= 5 and 1 <= q <= 4, drawn from random.Random(seed)
  """
  rng = random.Random(seed)
  entry = lambda: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
  points = []
  for _ in range(count):
    x = [[entry() for _ in range(action.cols)] for _ in range(action.rows)]
    y = [[entry() for _ in range(action.cols)] for _ in range(action.rows)]
    points.append((x, y))
  return points


def rank_sweep(action: LinearAction, count: int = 20, seed: int = 0) -> List[RankRecord]:
  """
  @brief Compares the Jacobian rank of the moment map with the orbit tangent rank at sample points
  @param action  The linear action
  @param count   Number of sample points
  @param seed    Seed of the sample
  @returns       One record per point
  """
  system  = MomentSystem(action)
  records = [RankRecord(k, system.jacobian_rank(point), system.orbit_tangent_rank(point))
             for k, point in enumerate(sample_points(action, count, seed))]
  logger.info("Rank sweep for %s: %d of %d points agree", action.name, sum(r.equal for r in records), len(records))
  return records


def standard_actions() -> List[LinearAction]:
  """gl_2 x gl_2 on 2 x 2, gl_2 x gl_3 on 2 x 3 and sp_4 x gl_3 on 4 x 3 matrices"""
  return [LinearAction.gl_gl(2, 2), LinearAction.gl_gl(2, 3), LinearAction.sp_gl(2, 3)]

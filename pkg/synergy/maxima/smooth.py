"""Smooth sequences: maxima given in x order, each followed by what it dominates.

A greedy scan keeps the current tip of the staircase. A point continues the
run when the tip dominates it, or when it lies right of the tip and below
it (it becomes the new tip). Anything else ends the run.
"""
import logging
from dataclasses import dataclass, field

from synergy.geom_core import DECOMPOSE, charge, dominates, phase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmoothRun:
    # 1-based inclusive interval of input positions
    lo: int
    hi: int
    staircase: tuple


@dataclass(frozen=True)
class SmoothDecomposition:
    runs: tuple = field(default_factory=tuple)

    @property
    def sigma(self):
        return len(self.runs)

    @property
    def staircases(self):
        return [run.staircase for run in self.runs]


def _continues(tip, q, counter):
    """Whether q extends the run whose current tip is tip; returns (ok, new_tip)."""
    if dominates(tip, q, counter):
        return True, tip
    charge(counter)
    if q.x > tip.x and q.y < tip.y:
        return True, q
    return False, tip


def validate_smooth(points, counter=None):
    """True iff the greedy scan reads the whole sequence as a single run."""
    if not points:
        return True
    tip = points[0]
    for q in points[1:]:
        ok, tip = _continues(tip, q, counter)
        if not ok:
            return False
    return True


def decompose_smooth(points, counter=None):
    """Split points into maximal smooth prefixes, greedily, left to right.

    Args:
        points: deduplicated list of Point
        counter: optional ProbeCounter, charged under the "decompose" phase

    Returns:
        SmoothDecomposition whose runs carry their 1-based intervals and staircases.
    """
    runs = []
    with phase(counter, DECOMPOSE):
        start = 0
        while start < len(points):
            tips = [points[start]]
            end = start + 1
            while end < len(points):
                ok, tip = _continues(tips[-1], points[end], counter)
                if not ok:
                    break
                if tip != tips[-1]:
                    tips.append(tip)
                end += 1
            runs.append(SmoothRun(start + 1, end, tuple(tips)))
            start = end
    logger.debug("decomposed %d points into %d smooth runs", len(points), len(runs))
    return SmoothDecomposition(tuple(runs))

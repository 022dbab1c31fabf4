"""Staircase checks and order-preserving deduplication."""
import logging
from functools import cmp_to_key

from synergy.geom_core import DEDUP, InvalidSequenceError, charge, phase

logger = logging.getLogger(__name__)


def is_staircase(points):
    """True iff x strictly increases and y strictly decreases along points."""
    return all(p.x < q.x and p.y > q.y for p, q in zip(points, points[1:]))


def require_staircases(seqs):
    """Raise InvalidSequenceError naming the first broken sequence (1-based)."""
    for i, seq in enumerate(seqs, start=1):
        for pos in range(1, len(seq)):
            p, q = seq[pos - 1], seq[pos]
            if not (p.x < q.x and p.y > q.y):
                raise InvalidSequenceError(
                    f"sequence {i} is not a staircase at positions {pos}-{pos + 1}: {p} then {q}",
                    seq=i,
                    position=pos + 1,
                )


def dedup_points(points, counter=None):
    """Drop exact duplicate points, keeping first occurrences in input order.

    Positions are sorted by (x, y), which leaves equal points next to each
    other and in input order; every comparison is charged to the dedup
    phase.
    """
    points = list(points)

    def compare(i, j):
        charge(counter)
        return (points[i] > points[j]) - (points[i] < points[j])

    with phase(counter, DEDUP):
        order = sorted(range(len(points)), key=cmp_to_key(compare))
        keep = [True] * len(points)
        for i, j in zip(order, order[1:]):
            charge(counter)
            if points[i] == points[j]:
                keep[j] = False
    unique = [p for p, kept in zip(points, keep) if kept]
    if len(unique) != len(points):
        logger.debug("removed %d duplicate points", len(points) - len(unique))
    return unique

"""Simplicity test for polygonal chains.

A chain p_1, ..., p_m is simple when no two non-adjacent segments meet
and adjacent segments share only their common endpoint. The test is a
Shamos-Hoey sweep: segments enter an ordered active list at their left
endpoint and leave it at their right endpoint, and only segments that
become neighbours in the list are tested against each other. The sweep
orders points lexicographically by (x, y), so a vertical segment starts
at its lower endpoint.
"""
import logging
from dataclasses import dataclass

from synergy.geom_core import orient

logger = logging.getLogger(__name__)

START, END = 0, 1


class _Touch(Exception):
    """Two segments meet where they must not."""


@dataclass(frozen=True)
class _Segment:
    index: int
    left: object
    right: object


@dataclass(order=True, frozen=True)
class _Event:
    point: object
    kind: int  # START before END at the same point
    index: int


def _on_box(p, q, r):
    return min(p.x, r.x) <= q.x <= max(p.x, r.x) and min(p.y, r.y) <= q.y <= max(p.y, r.y)


def _segments_touch(s, t, counter):
    o1 = orient(s.left, s.right, t.left, counter)
    o2 = orient(s.left, s.right, t.right, counter)
    o3 = orient(t.left, t.right, s.left, counter)
    o4 = orient(t.left, t.right, s.right, counter)
    if o1 != o2 and o3 != o4:
        return True
    return (
        (o1 == 0 and _on_box(s.left, t.left, s.right))
        or (o2 == 0 and _on_box(s.left, t.right, s.right))
        or (o3 == 0 and _on_box(t.left, s.left, t.right))
        or (o4 == 0 and _on_box(t.left, s.right, t.right))
    )


def _adjacent(s, t):
    return abs(s.index - t.index) == 1


def _starts_above(s, t, counter):
    """Whether s, entering at its left endpoint, belongs above the active t."""
    q = s.left
    side = orient(t.left, t.right, q, counter)
    if side:
        return side > 0
    # q is on t: legal only as the endpoint shared with a chain neighbour
    if not (_adjacent(s, t) and q in (t.left, t.right)):
        raise _Touch
    return orient(t.left, t.right, s.right, counter) >= 0


def _overlapping_turn(p, q, r, counter):
    # collinear and doubling back along the previous segment
    if orient(p, q, r, counter):
        return False
    return (q.x - p.x) * (r.x - q.x) + (q.y - p.y) * (r.y - q.y) < 0


def is_simple_chain(points, counter=None):
    """True iff the polygonal chain through points does not intersect itself.

    Repeated points make a chain non-simple. Chains of fewer than three
    distinct points are simple.
    """
    points = list(points)
    if len(set(points)) != len(points):
        return False
    if len(points) < 3:
        return True
    for p, q, r in zip(points, points[1:], points[2:]):
        if _overlapping_turn(p, q, r, counter):
            return False

    segments = [_Segment(i, *sorted((p, q))) for i, (p, q) in enumerate(zip(points, points[1:]))]
    events = []
    for seg in segments:
        events.append(_Event(seg.left, START, seg.index))
        events.append(_Event(seg.right, END, seg.index))
    events.sort()

    # segment indices ordered bottom to top along the sweep line
    active = []
    try:
        for event in events:
            seg = segments[event.index]
            if event.kind == START:
                lo, hi = 0, len(active)
                while lo < hi:
                    mid = (lo + hi) // 2
                    if _starts_above(seg, segments[active[mid]], counter):
                        lo = mid + 1
                    else:
                        hi = mid
                active.insert(lo, seg.index)
                neighbours = [active[pos] for pos in (lo - 1, lo + 1) if 0 <= pos < len(active)]
                for other in neighbours:
                    other = segments[other]
                    if not _adjacent(seg, other) and _segments_touch(seg, other, counter):
                        raise _Touch
            else:
                pos = active.index(seg.index)
                active.pop(pos)
                if 0 < pos < len(active):
                    below, above = segments[active[pos - 1]], segments[active[pos]]
                    if not _adjacent(below, above) and _segments_touch(below, above, counter):
                        raise _Touch
    except _Touch:
        logger.debug("chain of %d points is not simple (sweep stopped at %s)", len(points), event.point)
        return False
    return True

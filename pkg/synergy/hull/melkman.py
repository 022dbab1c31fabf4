"""Melkman's convex hull of a simple polygonal chain in O(m) predicates."""
import logging
from collections import deque

from synergy.geom_core import PreconditionError, orient
from synergy.hull.simplicity import is_simple_chain

logger = logging.getLogger(__name__)


def _beyond(v, tip, base):
    # v continues the ray base -> tip past tip
    return (v.x - tip.x) * (tip.x - base.x) + (v.y - tip.y) * (tip.y - base.y) > 0


def _collinear_hulls(points):
    left, right = min(points), max(points)
    if left.x == right.x:
        return [right], [left]
    return [left, right], [left, right]


def _split(polygon):
    """Cut a strictly convex counterclockwise polygon into upper and lower chains."""
    size = len(polygon)
    upper_right = max(range(size), key=lambda i: (polygon[i].x, polygon[i].y))
    upper_left = min(range(size), key=lambda i: (polygon[i].x, -polygon[i].y))
    lower_left = min(range(size), key=lambda i: (polygon[i].x, polygon[i].y))
    lower_right = max(range(size), key=lambda i: (polygon[i].x, -polygon[i].y))

    def walk(start, stop):
        chain = [polygon[start]]
        i = start
        while i != stop:
            i = (i + 1) % size
            chain.append(polygon[i])
        return chain

    upper = walk(upper_right, upper_left)
    upper.reverse()
    return upper, walk(lower_left, lower_right)


def simple_chain_hull(points, counter=None, check=True):
    """Upper and lower hull of a simple chain, both listed left to right.

    Args:
        points: the chain, in chain order
        counter: optional ProbeCounter
        check: test simplicity first (the baseline hull has already done so)

    Returns:
        (upper, lower): strict hull chains sharing their extreme points,
        except that a vertical extreme edge leaves the upper chain at its
        top and the lower chain at its bottom.

    Raises:
        PreconditionError: the chain is not simple.
    """
    points = list(points)
    if check and not is_simple_chain(points, counter):
        raise PreconditionError("simple_chain_hull needs a simple chain")
    if not points:
        return [], []
    if len(points) == 1:
        return list(points), list(points)

    # the chain opens on a collinear run p_0 .. p_{k-1}
    k = 2
    while k < len(points) and orient(points[0], points[1], points[k], counter) == 0:
        k += 1
    if k == len(points):
        return _collinear_hulls(points)

    first, last, apex = points[0], points[k - 1], points[k]
    if orient(first, last, apex, counter) > 0:
        hull = deque([apex, first, last, apex])
    else:
        hull = deque([apex, last, first, apex])

    for v in points[k + 1:]:
        top = orient(hull[-2], hull[-1], v, counter)
        bottom = orient(hull[0], hull[1], v, counter)
        outside_top = top < 0 or (top == 0 and _beyond(v, hull[-1], hull[-2]))
        outside_bottom = bottom < 0 or (bottom == 0 and _beyond(v, hull[0], hull[1]))
        if not (outside_top or outside_bottom):
            continue
        while len(hull) > 2 and orient(hull[-2], hull[-1], v, counter) <= 0:
            hull.pop()
        hull.append(v)
        while len(hull) > 2 and orient(v, hull[0], hull[1], counter) <= 0:
            hull.popleft()
        hull.appendleft(v)

    polygon = list(hull)[:-1]
    upper, lower = _split(polygon)
    logger.debug("chain of %d points has a hull of %d vertices", len(points), len(polygon))
    return upper, lower

"""Supporting lines and tangents on upper hull sequences.

The public functions take whole sequences and return 1-based positions.
The underscored variants work on an inclusive 0-based index range of a
sequence, which is how Quick Union Hull addresses the remaining parts of
its inputs.
"""
import logging
from fractions import Fraction

from synergy.geom_core import (
    End,
    Line,
    Ordering,
    PreconditionError,
    Side,
    VerticalLine,
    charge,
    cmp_slopes,
    cross_sign_slope,
    doubling_search,
    side_of_line,
    slope,
)

logger = logging.getLogger(__name__)


def _supporting(seq, lo, hi, value, counter=None):
    """Index in [lo..hi] maximizing y - value * x, leftmost on ties."""
    return doubling_search(
        lo, hi - 1, lambda t: cross_sign_slope(seq[t], seq[t + 1], value) is not Ordering.GT, End.BOTH, counter
    )


def _tangent_right(p, seq, lo, hi, counter=None):
    """Contact of the steepest line from p over seq[lo..hi], farthest on ties."""
    return doubling_search(
        lo, hi - 1, lambda t: cmp_slopes(p, seq[t + 1], p, seq[t]) is Ordering.LT, End.BOTH, counter
    )


def _tangent_left(p, seq, lo, hi, counter=None):
    """Contact of the flattest line into p from seq[lo..hi], leftmost on ties."""
    return doubling_search(
        lo, hi - 1, lambda t: cmp_slopes(seq[t], p, seq[t + 1], p) is not Ordering.GT, End.BOTH, counter
    )


def _line_crossing_x(p, q, r, s):
    """Abscissa where line(p, q) meets line(r, s); the slopes differ."""
    m1, m2 = slope(p, q), slope(r, s)
    return (s.y - p.y + m1 * p.x - m2 * s.x) / (m1 - m2)


def _bridge_step(a, a_lo, a_hi, b, b_lo, b_hi, ranges, i, j, separator, counter=None):
    """One probe of the bridge search at a[i] and b[j].

    ranges is what is known so far about the contacts, (i_lo, i_hi, j_lo,
    j_hi); a_lo..a_hi and b_lo..b_hi are the ends of the hulls themselves.

    Returns:
        (narrowed ranges, True when a[i] and b[j] are the contacts)
    """
    i_lo, i_hi, j_lo, j_hi = ranges
    p, q = a[i], b[j]
    # a[i-1] strictly below, a[i+1] on or below the line p-q; the mirror for b
    a_left = i == a_lo or cmp_slopes(a[i - 1], p, p, q, counter) is Ordering.GT
    a_right = i == a_hi or cmp_slopes(p, a[i + 1], p, q, counter) is not Ordering.GT
    b_left = j == b_lo or cmp_slopes(b[j - 1], q, p, q, counter) is not Ordering.LT
    b_right = j == b_hi or cmp_slopes(q, b[j + 1], p, q, counter) is Ordering.LT
    if a_left and a_right and b_left and b_right:
        return (i, i, j, j), True
    if not a_left or not b_right:
        if not a_left:
            i_hi = i - 1
        if not b_right:
            j_lo = j + 1
    elif not a_right and b_left:
        i_lo, j_lo = i + 1, j
    elif a_right and not b_left:
        j_hi, i_hi = j - 1, i
    else:
        charge(counter)
        if _line_crossing_x(p, a[i + 1], b[j - 1], q) <= separator:
            i_lo = i + 1
        else:
            j_hi = j - 1
    return (i_lo, i_hi, j_lo, j_hi), False


def _bridge(a, a_lo, a_hi, b, b_lo, b_hi, separator, counter=None, ranges=None):
    """Upper common tangent of a[a_lo..a_hi] and b[b_lo..b_hi].

    separator is a rational x with a[a_hi].x <= separator < b[b_lo].x.
    Each step probes the middle of both remaining ranges and discards at
    least one half, so the probe count is O(log |a| + log |b|). ranges
    resumes a search that has already narrowed the contacts down.

    Returns:
        (i, j): leftmost contact in a, rightmost contact in b
    """
    ranges = ranges or (a_lo, a_hi, b_lo, b_hi)
    while True:
        i_lo, i_hi, j_lo, j_hi = ranges
        if i_lo > i_hi or j_lo > j_hi:
            raise PreconditionError("hulls are not separated by the given line")
        i, j = (i_lo + i_hi) // 2, (j_lo + j_hi) // 2
        ranges, found = _bridge_step(a, a_lo, a_hi, b, b_lo, b_hi, ranges, i, j, separator, counter)
        if found:
            return i, j


def _race(a, a_lo, a_hi, rivals, separator, counter=None):
    """Leftmost contact in a[a_lo..a_hi] over the bridges from a to every rival.

    rivals are (b, b_lo, b_hi) hulls right of the vertical separator. The
    bridge searches run in lockstep on the same vertex a[i]: each one probes
    its own hull until it knows on which side of a[i] its contact lies.
    When some contact is at or left of a[i], the searches whose contact is
    right of it stop for good; otherwise all of them move right. The last
    search left runs to completion.
    """
    i_lo, i_hi = a_lo, a_hi
    races = [(b, b_lo, b_hi, b_lo, b_hi) for b, b_lo, b_hi in rivals]
    while len(races) > 1 and i_lo < i_hi:
        i = (i_lo + i_hi) // 2
        at_or_left, right_of = [], []
        for b, b_lo, b_hi, j_lo, j_hi in races:
            ranges = (i_lo, i_hi, j_lo, j_hi)
            while ranges[0] <= i < ranges[1]:
                if ranges[2] > ranges[3]:
                    raise PreconditionError("hulls are not separated by the given line")
                j = (ranges[2] + ranges[3]) // 2
                ranges, _ = _bridge_step(a, a_lo, a_hi, b, b_lo, b_hi, ranges, i, j, separator, counter)
            decided = at_or_left if ranges[1] <= i else right_of
            decided.append((b, b_lo, b_hi, ranges[2], ranges[3]))
        if at_or_left:
            races, i_hi = at_or_left, i
        else:
            races, i_lo = right_of, i + 1
    if len(races) == 1 and i_lo < i_hi:
        b, b_lo, b_hi, j_lo, j_hi = races[0]
        return _bridge(a, a_lo, a_hi, b, b_lo, b_hi, separator, counter, (i_lo, i_hi, j_lo, j_hi))[0]
    return i_lo


def supporting_point(u, value, counter=None):
    """Position of the vertex of u maximizing y - value * x (leftmost on ties).

    Raises:
        PreconditionError: u is empty.
    """
    if not u:
        raise PreconditionError("supporting_point needs a non-empty hull")
    return _supporting(u, 0, len(u) - 1, Fraction(value), counter) + 1


def tangents_from_point(p, u, side, counter=None):
    """Position of the vertex q of u such that u lies on or below line p-q.

    Args:
        p: a point
        u: upper hull sequence lying strictly on the given side of p
        side: Side.RIGHT when u is right of p, Side.LEFT when left of it
        counter: optional ProbeCounter

    Raises:
        PreconditionError: u is empty or not strictly on that side.
    """
    if not u:
        raise PreconditionError("tangents_from_point needs a non-empty hull")
    if side is Side.RIGHT:
        if u[0].x <= p.x:
            raise PreconditionError(f"hull starting at {u[0]} is not strictly right of {p}")
        return _tangent_right(p, u, 0, len(u) - 1, counter) + 1
    if u[-1].x >= p.x:
        raise PreconditionError(f"hull ending at {u[-1]} is not strictly left of {p}")
    return _tangent_left(p, u, 0, len(u) - 1, counter) + 1


def tangent_between_hulls(a, b, separator, counter=None):
    """Upper common tangent of two hulls on either side of a separator.

    Args:
        a: upper hull on the left (on or above a sloped separator)
        b: upper hull on the right (below a sloped separator)
        separator: VerticalLine with a[-1].x <= x < b[0].x, or a Line
            with every vertex of a on or above it and every vertex of b
            strictly below it
        counter: optional ProbeCounter

    Returns:
        (position in a, position in b) of the tangent's contact points

    Raises:
        PreconditionError: the separator does not separate a from b.
    """
    if not a or not b:
        raise PreconditionError("tangent_between_hulls needs two non-empty hulls")
    if isinstance(separator, Line) and separator.is_vertical:
        separator = VerticalLine(separator.a.x)
    if isinstance(separator, VerticalLine):
        if not a[-1].x <= separator.x < b[0].x:
            raise PreconditionError(f"x = {separator.x} does not separate the hulls")
        i, j = _bridge(a, 0, len(a) - 1, b, 0, len(b) - 1, separator.x, counter)
        return i + 1, j + 1

    line = separator
    if side_of_line(line.a, line.b, a[0], counter) < 0 or side_of_line(line.a, line.b, a[-1], counter) < 0:
        raise PreconditionError("the first hull dips below the separator")
    top = _supporting(b, 0, len(b) - 1, line.slope, counter)
    if side_of_line(line.a, line.b, b[top], counter) >= 0:
        raise PreconditionError("the second hull reaches the separator")
    if b[0].x <= a[0].x:
        raise PreconditionError("the second hull starts left of the first")
    # b's vertices left of a's last vertex lie under a and never touch the tangent
    cut = doubling_search(0, len(b) - 1, lambda t: b[t].x > a[-1].x, End.LOW, counter)
    if cut == len(b):
        raise PreconditionError("the second hull ends before the first")
    i, j = _bridge(a, 0, len(a) - 1, b, cut, len(b) - 1, Fraction(a[-1].x), counter)
    return i + 1, j + 1

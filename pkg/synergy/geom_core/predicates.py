"""Exact geometric predicates on integer points.

All arithmetic is on Python integers, so results are exact for any point
that passed the Point coordinate check. Each call charges one unit to the
optional counter.
"""
from synergy.geom_core.counter import charge
from synergy.geom_core.errors import DegenerateLineError, PreconditionError
from synergy.geom_core.point import Ordering


def _sign(value):
    return (value > 0) - (value < 0)


def orient(p, q, r, counter=None):
    """Sign of (q - p) x (r - p): +1 when r is left of the directed line p -> q."""
    charge(counter)
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def dominates(p, q, counter=None):
    """True iff p dominates q; a point never dominates itself."""
    charge(counter)
    return p.x >= q.x and p.y >= q.y and p != q


def weakly_dominates(p, q, counter=None):
    charge(counter)
    return p.x >= q.x and p.y >= q.y


def cmp_slopes(p, q, r, s, counter=None):
    """Compare slope(p, q) with slope(r, s) by cross multiplication.

    Args:
        p, q: first edge, q strictly right of p
        r, s: second edge, s strictly right of r
        counter: optional ProbeCounter

    Returns:
        Ordering.LT, Ordering.EQ or Ordering.GT
    """
    if q.x <= p.x or s.x <= r.x:
        raise PreconditionError(f"cmp_slopes needs left-to-right edges, got {p}->{q} and {r}->{s}")
    charge(counter)
    return Ordering(_sign((q.y - p.y) * (s.x - r.x) - (s.y - r.y) * (q.x - p.x)))


def side_of_line(a, b, q, counter=None):
    """Position of q relative to the line through a and b.

    Returns -1 when q is strictly below the line, 0 on it and +1 above.
    For a vertical line "above" means left of it.
    """
    if a == b:
        raise DegenerateLineError(f"side_of_line needs two distinct points, got {a} twice")
    left, right = (a, b) if a < b else (b, a)
    return orient(left, right, q, counter)


def cross_sign_slope(p, q, m, counter=None):
    """Compare slope(p, q) with an exact rational m (q strictly right of p)."""
    if q.x <= p.x:
        raise PreconditionError(f"edge {p}->{q} is not left-to-right")
    charge(counter)
    return Ordering(_sign((q.y - p.y) - m * (q.x - p.x)))

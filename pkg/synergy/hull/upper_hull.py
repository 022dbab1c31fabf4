"""Upper hull sequences: validation, mirroring and linear merging."""
from synergy.geom_core import InvalidSequenceError, charge, orient


def is_upper_hull(points):
    """True iff x strictly increases and edge slopes strictly decrease."""
    if any(p.x >= q.x for p, q in zip(points, points[1:])):
        return False
    return all(orient(p, q, r) < 0 for p, q, r in zip(points, points[1:], points[2:]))


def require_upper_hulls(seqs):
    """Raise InvalidSequenceError naming the first broken sequence (1-based)."""
    for i, seq in enumerate(seqs, start=1):
        for pos in range(1, len(seq)):
            if seq[pos - 1].x >= seq[pos].x:
                raise InvalidSequenceError(
                    f"sequence {i}: x does not increase at positions {pos}-{pos + 1}", seq=i, position=pos + 1
                )
        for pos in range(2, len(seq)):
            if orient(seq[pos - 2], seq[pos - 1], seq[pos]) >= 0:
                raise InvalidSequenceError(
                    f"sequence {i}: slopes do not strictly decrease at position {pos}", seq=i, position=pos
                )


def mirror(points):
    """Reflect through the x-axis; lower hulls become upper hulls and back."""
    return [p.mirrored() for p in points]


def upper_hull_of_sorted(points, counter=None):
    """Strict upper hull of points already sorted by (x, y).

    Equal-x runs keep only their highest point; collinear vertices are popped.
    """
    hull = []
    for q in points:
        if hull and hull[-1].x == q.x:
            # sorted by (x, y): q is the higher one
            hull.pop()
        while len(hull) >= 2:
            charge(counter)
            if orient(hull[-2], hull[-1], q) < 0:
                break
            hull.pop()
        hull.append(q)
    return hull


def merge_two_upper_hulls(a, b, counter=None):
    """Upper hull of the union of two upper hulls in O(|a| + |b|) predicates."""
    merged = []
    i = j = 0
    while i < len(a) or j < len(b):
        if j == len(b) or (i < len(a) and (a[i].x, a[i].y) <= (b[j].x, b[j].y)):
            merged.append(a[i])
            i += 1
        else:
            merged.append(b[j])
            j += 1
        charge(counter)
    return upper_hull_of_sorted(merged, counter)

"""Brute-force references for the maxima and upper hull of a point set."""
from synergy.geom_core import charge, dominates
from synergy.hull.upper_hull import upper_hull_of_sorted


def brute_maxima(points, counter=None):
    """Points no other point dominates, sorted by x, by testing every pair."""
    unique = list(dict.fromkeys(points))
    maxima = [p for p in unique if not any(dominates(q, p, counter) for q in unique)]
    return sorted(maxima)


def sweep_maxima(points, counter=None):
    """Same set as brute_maxima in O(n log n): sweep right to left, keep new highs."""
    maxima = []
    for p in sorted(set(points), key=lambda p: (-p.x, -p.y)):
        charge(counter)
        if not maxima or p.y > maxima[-1].y:
            maxima.append(p)
    maxima.reverse()
    return maxima


def brute_upper_hull(points, counter=None):
    """Strict upper hull by Andrew's monotone chain on the sorted points."""
    return upper_hull_of_sorted(sorted(set(points)), counter)

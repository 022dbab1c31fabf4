"""Linear merging of staircases and the pairwise-merging baseline."""
from synergy.geom_core import MERGE, charge, phase


def merge_two_staircases(a, b, counter=None):
    """Maxima of the union of two staircases, in O(|a| + |b|) comparisons.

    Both inputs are walked from their right ends; a point survives when it
    is higher than everything already seen to its right.
    """
    merged = []
    best_y = None
    i, j = len(a) - 1, len(b) - 1
    while i >= 0 or j >= 0:
        if j < 0:
            q, i = a[i], i - 1
        elif i < 0:
            q, j = b[j], j - 1
        else:
            charge(counter)
            # larger x first; on equal x the higher point first
            if (a[i].x, a[i].y) >= (b[j].x, b[j].y):
                q, i = a[i], i - 1
            else:
                q, j = b[j], j - 1
        charge(counter)
        if best_y is None or q.y > best_y:
            merged.append(q)
            best_y = q.y
    merged.reverse()
    return merged


def merge_staircases_pairwise(staircases, counter=None):
    """Merge staircases two by two in balanced rounds: O(n (1 + log sigma))."""
    with phase(counter, MERGE):
        level = [list(s) for s in staircases]
        if not level:
            return []
        while len(level) > 1:
            paired = [merge_two_staircases(level[k], level[k + 1], counter) for k in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                paired.append(level[-1])
            level = paired
        return level[0]

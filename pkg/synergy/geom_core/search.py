"""Doubling (galloping) search and comparison-counted selection."""
from synergy.geom_core.counter import charge
from synergy.geom_core.point import End


def _gallop_offset(step):
    # 0, 8, 32, 128, ...: growing by 4 per step keeps the two-ended
    # alternation within 2*ceil(log2(d + 2)) + 3 probes
    return 0 if step == 0 else 2 ** (2 * step + 1)


def doubling_search(lo, hi, pred, start=End.LOW, counter=None):
    """Find the first index of [lo..hi] where a monotone predicate holds.

    pred must be false on a (possibly empty) prefix of the range and true
    on the rest. The search gallops from the chosen end, or from both ends
    alternately (low end first) when start is End.BOTH, then finishes with
    a binary search inside the bracket it found. Every call of pred is one
    probe charged to counter.

    Let b be the returned index. The probe count is at most
    2 * ceil(log2(d + 2)) + 3 where d = b - lo from End.LOW,
    d = hi + 1 - b from End.HIGH, and the smaller of the two for End.BOTH.

    Args:
        lo: first index of the range
        hi: last index of the range (hi < lo means an empty range)
        pred: monotone predicate on indices
        start: End.LOW, End.HIGH or End.BOTH
        counter: optional ProbeCounter

    Returns:
        The smallest index where pred holds, or hi + 1 if there is none.
    """
    if hi < lo:
        return lo

    # last index known false and first index known true
    known_false, known_true = lo - 1, hi + 1

    def probe(index):
        nonlocal known_false, known_true
        charge(counter)
        if pred(index):
            known_true = index
        else:
            known_false = index

    sides = {End.LOW: (End.LOW,), End.HIGH: (End.HIGH,), End.BOTH: (End.LOW, End.HIGH)}[start]
    step = 0
    bracketed = False
    while not bracketed:
        for side in sides:
            if side is End.LOW:
                index = min(lo + _gallop_offset(step), hi)
                if known_false < index < known_true:
                    probe(index)
                # the low gallop stops at its first true position
                if index >= known_true or index == hi:
                    bracketed = True
            else:
                index = max(hi - _gallop_offset(step), lo)
                if known_false < index < known_true:
                    probe(index)
                if index <= known_false or index == lo:
                    bracketed = True
            if bracketed:
                break
        step += 1

    while known_true - known_false > 1:
        probe((known_false + known_true) // 2)
    return known_true


def select(items, rank, counter=None):
    """Return the element of the given 0-based rank in sorted order.

    Quickselect with a median-of-three pivot; every element-pivot
    comparison is charged to counter.
    """
    values = list(items)
    if not 0 <= rank < len(values):
        raise IndexError(f"rank {rank} outside 0..{len(values) - 1}")
    while True:
        if len(values) == 1:
            return values[0]
        first, middle, last = values[0], values[len(values) // 2], values[-1]
        charge(counter, 3)
        pivot = sorted((first, middle, last))[1]

        smaller = [v for v in values if v < pivot]
        larger = [v for v in values if v > pivot]
        charge(counter, 2 * len(values))
        equal = len(values) - len(smaller) - len(larger)

        if rank < len(smaller):
            values = smaller
        elif rank < len(smaller) + equal:
            return pivot
        else:
            rank -= len(smaller) + equal
            values = larger


def lower_median(items, counter=None):
    """Lower median (rank (len - 1) // 2) of a non-empty collection."""
    values = list(items)
    return select(values, (len(values) - 1) // 2, counter)

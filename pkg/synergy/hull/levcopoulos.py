"""Recursive baseline: halve until the chain is simple, then merge hulls."""
import logging
from collections import Counter

from synergy.geom_core import CHAIN_HULL, MERGE, PARTITION, CostReport, ProbeCounter, partition_entropy, phase
from synergy.hull.melkman import simple_chain_hull
from synergy.hull.simplicity import is_simple_chain
from synergy.hull.upper_hull import merge_two_upper_hulls, mirror

logger = logging.getLogger(__name__)


def levcopoulos_hull(points, counter=None):
    """Upper and lower hull by recursive halving.

    A simple chain is handed to Melkman's algorithm; anything else is cut
    into two halves whose hulls are merged in linear time.

    Returns:
        (upper, lower, CostReport) where level_counts maps recursion depth
        to the predicates spent at that depth and sizes lists the simple
        chains the recursion stopped at.
    """
    points = list(points)
    counter = counter if counter is not None else ProbeCounter()
    level_counts = Counter()
    leaves = []

    def solve(chain, level):
        before = counter.predicate_count
        with phase(counter, PARTITION):
            simple = is_simple_chain(chain, counter)
        if simple:
            with phase(counter, CHAIN_HULL):
                upper, lower = simple_chain_hull(chain, counter, check=False)
            leaves.append(len(chain))
            level_counts[level] += counter.predicate_count - before
            return upper, lower
        level_counts[level] += counter.predicate_count - before

        middle = len(chain) // 2
        left_upper, left_lower = solve(chain[:middle], level + 1)
        right_upper, right_lower = solve(chain[middle:], level + 1)
        before = counter.predicate_count
        with phase(counter, MERGE):
            upper = merge_two_upper_hulls(left_upper, right_upper, counter)
            lower = mirror(merge_two_upper_hulls(mirror(left_lower), mirror(right_lower), counter))
        level_counts[level] += counter.predicate_count - before
        return upper, lower

    upper, lower = solve(points, 0) if points else ([], [])
    report = CostReport(
        algorithm="levcopoulos_hull",
        n=len(points),
        h=len(upper),
        kappa=len(leaves),
        sizes=leaves,
        entropy=partition_entropy(leaves),
        phase_counts=counter.snapshot(),
        level_counts=dict(sorted(level_counts.items())),
    )
    logger.debug("baseline hull: %d points, %d simple leaves, depth %d", len(points), len(leaves), len(level_counts))
    return upper, lower, report

"""Doubling Search Partition: split a point sequence into simple chains.

Starting at p_i, the partition tests the chains p_i..p_{i+2^t} for t = 1,
2, ... until one is not simple or runs past the end of the input, and
emits the last chain that passed, p_i..p_{i+2^(t-1)}. When the test runs
past the end, the rest of the input is tested once and emitted whole if
it is simple. The longest variant binary-searches between the last
success and the first failure instead, which yields the fewest chains.
"""
import logging
from dataclasses import dataclass

from synergy.geom_core import PARTITION, partition_entropy, phase
from synergy.hull.simplicity import is_simple_chain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainPartition:
    """Chains as 1-based inclusive (lo, hi) intervals covering 1..n in order."""

    chains: tuple = ()

    @property
    def kappa(self):
        return len(self.chains)

    @property
    def sizes(self):
        return [hi - lo + 1 for lo, hi in self.chains]

    @property
    def entropy(self):
        return partition_entropy(self.sizes)

    def pieces(self, points):
        return [list(points[lo - 1:hi]) for lo, hi in self.chains]


def _doubling_prefix(points, start, counter):
    """Size of the next chain starting at index start, and the first failing size.

    Returns (good, bad): the chain of good points passed, and either the
    chain of bad points failed or bad is None when the rest is simple.
    """
    remaining = len(points) - start
    good, t = 1, 1
    while True:
        size = 2 ** t + 1
        if size > remaining:
            if is_simple_chain(points[start:], counter):
                return remaining, None
            bad = remaining
            break
        if not is_simple_chain(points[start:start + size], counter):
            bad = size
            break
        good = size
        t += 1
    if good == 1 and bad > 2 and is_simple_chain(points[start:start + 2], counter):
        good = 2
    return good, bad


def _longest_simple_prefix(points, start, counter):
    """Size of the longest simple chain starting at index start (at least 1)."""
    good, bad = _doubling_prefix(points, start, counter)
    while bad is not None and bad - good > 1:
        mid = (good + bad) // 2
        if is_simple_chain(points[start:start + mid], counter):
            good = mid
        else:
            bad = mid
    return good


def partition_simple_chains(points, counter=None, longest=False):
    """Partition points, in input order, into consecutive simple chains.

    Args:
        points: the input sequence
        counter: optional ProbeCounter, charged under the partition phase
        longest: emit the longest simple prefix each time rather than the
            last doubling prefix that passed
    """
    points = list(points)
    chains = []
    start = 0
    with phase(counter, PARTITION):
        while start < len(points):
            if longest:
                size = _longest_simple_prefix(points, start, counter)
            else:
                size, _ = _doubling_prefix(points, start, counter)
            chains.append((start + 1, start + size))
            start += size
    partition = ChainPartition(tuple(chains))
    logger.debug("partitioned %d points into %d simple chains", len(points), partition.kappa)
    return partition

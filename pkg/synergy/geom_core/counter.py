"""Predicate counting.

Every predicate and every key comparison inside a search charges one unit
to a ProbeCounter. Counts are split by phase label so a report can tell
the merge cost apart from preprocessing.
"""
from collections import Counter
from contextlib import contextmanager, nullcontext
from dataclasses import dataclass, field

DEFAULT_PHASE = "main"

# phase labels used across the package
DEDUP = "dedup"
DECOMPOSE = "decompose"
PARTITION = "partition"
CHAIN_HULL = "chain_hull"
MERGE = "merge"
CERTIFY = "certify"


@dataclass
class ProbeCounter:
    phase_counts: Counter = field(default_factory=Counter)
    phase: str = DEFAULT_PHASE

    @property
    def predicate_count(self):
        return sum(self.phase_counts.values())

    total = predicate_count

    def tick(self, n=1):
        self.phase_counts[self.phase] += n

    @contextmanager
    def in_phase(self, label):
        previous = self.phase
        self.phase = label
        try:
            yield self
        finally:
            self.phase = previous

    def child(self):
        """Fresh counter for a concurrent branch; fold it back with merge()."""
        return ProbeCounter(phase=self.phase)

    def merge(self, other):
        self.phase_counts.update(other.phase_counts)
        return self

    def snapshot(self):
        return {label: count for label, count in sorted(self.phase_counts.items()) if count}


def charge(counter, n=1):
    """Tick counter by n unless counting is switched off (counter is None)."""
    if counter is not None:
        counter.tick(n)


def phase(counter, label):
    """Context manager switching counter to label; a no-op without a counter."""
    if counter is None:
        return nullcontext()
    return counter.in_phase(label)

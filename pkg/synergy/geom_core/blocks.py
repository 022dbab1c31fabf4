"""Block references and verdicts shared by the maxima and hull certificates.

A block is a run of consecutive positions of one input sequence. All
positions are 1-based, as they appear in certificate text.
"""
from dataclasses import dataclass

from synergy.geom_core.errors import StructuralError


@dataclass(frozen=True)
class BlockRef:
    seq: int
    lo: int
    hi: int
    pivot: int | None = None

    def positions(self):
        return range(self.lo, self.hi + 1)

    @property
    def span(self):
        return self.seq, self.lo, self.hi


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""

    @classmethod
    def ok(cls):
        return cls(True)

    @classmethod
    def invalid(cls, reason):
        return cls(False, reason)

    def __bool__(self):
        return self.valid

    def __str__(self):
        return "VALID" if self.valid else f"INVALID({self.reason})"


def require_in_range(seqs, ref, what="block"):
    """Raise StructuralError unless ref addresses existing positions."""
    if not 1 <= ref.seq <= len(seqs):
        raise StructuralError(f"{what} {ref.span} names sequence {ref.seq} of {len(seqs)}")
    size = len(seqs[ref.seq - 1])
    if not 1 <= ref.lo <= ref.hi <= size:
        raise StructuralError(f"{what} {ref.span} outside positions 1..{size} of sequence {ref.seq}")
    if ref.pivot is not None and not ref.lo <= ref.pivot <= ref.hi:
        raise StructuralError(f"{what} {ref.span} has pivot {ref.pivot} outside its block")


def first_uncovered(lengths, intervals):
    """First (seq, pos) not inside any of the (seq, lo, hi) intervals, else None."""
    by_seq = {}
    for seq, lo, hi in intervals:
        by_seq.setdefault(seq, []).append((lo, hi))
    for seq, size in enumerate(lengths, start=1):
        reach = 0
        for lo, hi in sorted(by_seq.get(seq, ())):
            if lo > reach + 1:
                break
            reach = max(reach, hi)
        if reach < size:
            return seq, reach + 1
    return None


def certificate_length(cert):
    """Number of distinct argument points (sequence, position) in cert."""
    points = set()
    for arg in cert.arguments:
        points |= arg.argument_points()
    return len(points)


def block_count(cert):
    return sum(len(arg.blocks()) for arg in cert.arguments)


def m_list(cert):
    """Per argument, the number of distinct sequences it refers to."""
    return [len(arg.sequences()) for arg in cert.arguments]

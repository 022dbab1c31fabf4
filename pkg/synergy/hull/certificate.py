"""Certificates for the upper hull of a union of upper hull sequences.

Two kinds of arguments, with 1-based (sequence, position) anchors:

* ELIMINATOR, anchored at two points P and Q: every witness block lies in
  the closed vertical strip between P and Q, and its pivot (the block
  vertex with a supporting line parallel to PQ) lies on or below line
  PQ, so no point of the block is a vertex of the hull. Identical
  anchors eliminate single points sharing P's abscissa and lying no
  higher than P.
* CONVEX, anchored at the ends A and B of an output block of one
  sequence: each witness block c..e of another sequence has its vertex
  c strictly below some common supporting line at A, its vertex e below
  one at B, and its pivot d below the chord AB.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from synergy.geom_core import (
    BlockRef,
    Ordering,
    StructuralError,
    Verdict,
    charge,
    cross_sign_slope,
    first_uncovered,
    require_in_range,
    side_of_line,
    slope,
)
from synergy.hull.upper_hull import is_upper_hull

logger = logging.getLogger(__name__)


class HullArgumentKind(Enum):
    ELIMINATOR = "ELIM"
    CONVEX = "CONV"


@dataclass(frozen=True)
class HullArgument:
    """anchors: ((i, a), (j, b)); for CONVEX both anchors share sequence i."""

    kind: HullArgumentKind
    anchors: tuple
    witnesses: tuple = field(default_factory=tuple)

    @property
    def subject(self):
        (i, a), (_, b) = self.anchors
        return BlockRef(i, a, b)

    def argument_points(self):
        return set(self.anchors)

    def sequences(self):
        return {seq for seq, _ in self.anchors} | {w.seq for w in self.witnesses}

    def blocks(self):
        if self.kind is HullArgumentKind.CONVEX:
            return (self.subject,) + tuple(self.witnesses)
        return tuple(self.witnesses)


@dataclass(frozen=True)
class HullCertificate:
    arguments: tuple = field(default_factory=tuple)
    output_blocks: tuple = field(default_factory=tuple)


def _anchor_point(seqs, anchor):
    seq, pos = anchor
    require_in_range(seqs, BlockRef(seq, pos, pos), "anchor")
    return seqs[seq - 1][pos - 1]


def _require_witnesses(seqs, arg):
    for ref in arg.witnesses:
        require_in_range(seqs, ref, "witness")
        if ref.pivot is None:
            raise StructuralError(f"witness {ref.span} has no pivot")


def _brackets(seq, d, lo, hi, value, counter):
    """Whether vertex d of seq[lo..hi] (0-based) has a supporting line of slope value."""
    if d > lo and cross_sign_slope(seq[d - 1], seq[d], value, counter) is Ordering.LT:
        return False
    return not (d < hi and cross_sign_slope(seq[d], seq[d + 1], value, counter) is Ordering.GT)


def _check_eliminator(seqs, arg, counter):
    p, q = (_anchor_point(seqs, anchor) for anchor in arg.anchors)
    if p.x > q.x:
        p, q = q, p
    # an anchor cannot eliminate itself
    anchors = set(arg.anchors)
    for ref in arg.witnesses:
        if any((ref.seq, pos) in anchors for pos in ref.positions()):
            return False
    # a point paired with itself only eliminates copies of points under it
    if p.x == q.x:
        if p != q:
            return False
        for ref in arg.witnesses:
            z = seqs[ref.seq - 1][ref.lo - 1]
            charge(counter)
            if ref.lo != ref.hi or z.x != p.x or z.y > p.y:
                return False
        return True

    value = slope(p, q)
    for ref in arg.witnesses:
        seq = seqs[ref.seq - 1]
        charge(counter, 2)
        # inside the strip, with its top under the line
        if seq[ref.lo - 1].x < p.x or seq[ref.hi - 1].x > q.x:
            return False
        d = ref.pivot - 1
        if not _brackets(seq, d, ref.lo - 1, ref.hi - 1, value, counter):
            return False
        if side_of_line(p, q, seq[d], counter) > 0:
            return False
    return True


class _Interval:
    """Feasible slopes as an interval with open or closed rational ends."""

    def __init__(self):
        self.low, self.low_open = None, False
        self.high, self.high_open = None, False

    def above(self, value, strict=False):
        if self.low is None or value > self.low or (value == self.low and strict):
            self.low, self.low_open = value, strict

    def below(self, value, strict=False):
        if self.high is None or value < self.high or (value == self.high and strict):
            self.high, self.high_open = value, strict

    def support(self, seq, idx):
        """Slopes for which seq[idx] is the top of seq."""
        if idx > 0:
            self.below(slope(seq[idx - 1], seq[idx]))
        if idx < len(seq) - 1:
            self.above(slope(seq[idx], seq[idx + 1]))

    def empty(self):
        if self.low is None or self.high is None:
            return False
        return self.low > self.high or (self.low == self.high and (self.low_open or self.high_open))


def _supported_at(seqs, i, pos, contacts, counter):
    """Whether one line through seqs[i][pos] supports seqs[i] with every contact strictly below."""
    seq = seqs[i - 1]
    apex = seq[pos - 1]
    feasible = _Interval()
    feasible.support(seq, pos - 1)
    for k, c in contacts:
        other = seqs[k - 1]
        z = other[c - 1]
        charge(counter, 3)
        feasible.support(other, c - 1)
        # z strictly under the line through apex
        if z.x > apex.x:
            feasible.above(slope(apex, z), strict=True)
        elif z.x < apex.x:
            feasible.below(slope(z, apex), strict=True)
        elif z.y >= apex.y:
            return False
    return not feasible.empty()


def _check_convex(seqs, arg, counter):
    (i, a), (j, b) = arg.anchors
    if i != j:
        raise StructuralError(f"convex argument anchored in two sequences {i} and {j}")
    require_in_range(seqs, BlockRef(i, a, b), "convex block")
    for ref in arg.witnesses:
        if ref.seq == i:
            return False
    if not _supported_at(seqs, i, a, [(ref.seq, ref.lo) for ref in arg.witnesses], counter):
        return False
    if not _supported_at(seqs, i, b, [(ref.seq, ref.hi) for ref in arg.witnesses], counter):
        return False
    if a == b:
        return True
    seq = seqs[i - 1]
    # every witness stays strictly under the block's chord
    first, last = seq[a - 1], seq[b - 1]
    value = slope(first, last)
    for ref in arg.witnesses:
        other = seqs[ref.seq - 1]
        d = ref.pivot - 1
        if not _brackets(other, d, 0, len(other) - 1, value, counter):
            return False
        if side_of_line(first, last, other[d], counter) >= 0:
            return False
    return True


def check_hull_argument(seqs, arg, counter=None):
    """Check one argument in O(t) predicates, t being its witness count.

    Positions just outside a block or a sequence make the slope bound
    they would carry vacuous.

    Raises:
        StructuralError: an anchor or block is out of range, or a pivot
            is missing or outside its block.
    """
    if len(arg.anchors) != 2:
        raise StructuralError(f"argument with {len(arg.anchors)} anchors")
    _require_witnesses(seqs, arg)
    if arg.kind is HullArgumentKind.ELIMINATOR:
        return _check_eliminator(seqs, arg, counter)
    return _check_convex(seqs, arg, counter)


def verify_hull_certificate(seqs, cert, counter=None):
    """Decide whether cert proves that its output blocks form the upper hull.

    VALID needs every argument to hold, one CONVEX argument per output
    block, output blocks that concatenate into a strict upper hull,
    eliminator anchors taken from the output, and every input position
    inside an output block or an eliminator witness.
    """
    try:
        for ref in cert.output_blocks:
            require_in_range(seqs, ref, "output block")
        results = [check_hull_argument(seqs, arg, counter) for arg in cert.arguments]
    except StructuralError as exc:
        return Verdict.invalid(f"structural: {exc}")

    for index, holds in enumerate(results, start=1):
        if not holds:
            return Verdict.invalid(f"argument {index} ({cert.arguments[index - 1].kind.value}) does not hold")

    subjects = Counter(arg.subject.span for arg in cert.arguments if arg.kind is HullArgumentKind.CONVEX)
    outputs = Counter(ref.span for ref in cert.output_blocks)
    if subjects != outputs:
        mismatch = sorted((subjects - outputs) + (outputs - subjects))
        return Verdict.invalid(f"output block {mismatch[0]} is not the subject of exactly one convex argument")

    output = [seqs[ref.seq - 1][pos - 1] for ref in cert.output_blocks for pos in ref.positions()]
    charge(counter, len(output))
    if not is_upper_hull(output):
        return Verdict.invalid("output blocks do not concatenate into an upper hull")

    # eliminators must hang off points that are really on the hull
    in_output = {(ref.seq, pos) for ref in cert.output_blocks for pos in ref.positions()}
    for index, arg in enumerate(cert.arguments, start=1):
        if arg.kind is HullArgumentKind.ELIMINATOR and not set(arg.anchors) <= in_output:
            return Verdict.invalid(f"argument {index} (ELIM) is anchored outside the output")

    covering = [ref.span for ref in cert.output_blocks]
    covering += [w.span for arg in cert.arguments if arg.kind is HullArgumentKind.ELIMINATOR for w in arg.witnesses]
    hole = first_uncovered([len(s) for s in seqs], covering)
    if hole is not None:
        return Verdict.invalid(f"uncovered position: sequence {hole[0]} position {hole[1]}")
    return Verdict.ok()

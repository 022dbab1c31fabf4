"""Certificates for the maxima of a union of staircases.

A certificate lists output blocks (runs of consecutive positions of one
input staircase) and two kinds of arguments:

* DOMINATION: one output point weakly dominates every point of each
  witness block, so those points cannot be in the output.
* MAXIMALITY: for each witness sequence, nothing in it can dominate a
  point of the subject block. A witness either starts where the sequence
  leaves the left side of the block and lies below its last point, or
  ends where the sequence drops below the block while lying left of its
  first point.

All positions are 1-based.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from synergy.geom_core import End, StructuralError, charge, doubling_search, weakly_dominates
from synergy.geom_core.blocks import (
    BlockRef,
    Verdict,
    block_count,
    certificate_length,
    first_uncovered,
    m_list,
    require_in_range,
)

logger = logging.getLogger(__name__)


class ArgumentKind(Enum):
    DOMINATION = "DOM"
    MAXIMALITY = "MAX"


@dataclass(frozen=True)
class MaximaArgument:
    kind: ArgumentKind
    subject: BlockRef
    witnesses: tuple = field(default_factory=tuple)

    def argument_points(self):
        if self.kind is ArgumentKind.DOMINATION:
            return {(self.subject.seq, self.subject.lo)}
        return {(self.subject.seq, self.subject.lo), (self.subject.seq, self.subject.hi)}

    def sequences(self):
        return {self.subject.seq} | {w.seq for w in self.witnesses}

    def blocks(self):
        return (self.subject,) + tuple(self.witnesses)


@dataclass(frozen=True)
class MaximaCertificate:
    arguments: tuple = field(default_factory=tuple)
    output_blocks: tuple = field(default_factory=tuple)


def _below_last(z, last):
    return z.y < last.y or (z.y == last.y and z.x <= last.x)


def _left_of_first(z, first):
    return z.x < first.x or (z.x == first.x and z.y <= first.y)


def _maximality_witness_holds(seq, ref, first, last, counter):
    size = len(seq)
    charge(counter, 2)
    left_form = (ref.lo == 1 or seq[ref.lo - 2].x < first.x) and _below_last(seq[ref.lo - 1], last)
    if left_form:
        return True
    charge(counter, 2)
    return (ref.hi == size or seq[ref.hi].y < last.y) and _left_of_first(seq[ref.hi - 1], first)


def maximality_witness(seqs, k, first, last, counter=None):
    """Witness block proving sequence k cannot dominate the block first..last.

    Returns None when sequence k has a point inside the block's dominance
    window; such sequences are left out of the argument.
    """
    seq = seqs[k - 1]
    size = len(seq)
    # t points of seq lie strictly left of the block
    t = doubling_search(0, size - 1, lambda idx: seq[idx].x >= first.x, End.BOTH, counter)
    candidates = []
    if t < size:
        candidates.append(BlockRef(k, t + 1, t + 1))
    if t >= 1:
        candidates.append(BlockRef(k, t, t))
    for ref in candidates:
        if _maximality_witness_holds(seq, ref, first, last, counter):
            return ref
    return None


def check_maxima_argument(seqs, arg, counter=None):
    """Check one argument in O(t) predicates, t being its witness count.

    Raises:
        StructuralError: a block reference is out of range or malformed.
    """
    require_in_range(seqs, arg.subject, "subject")
    for ref in arg.witnesses:
        require_in_range(seqs, ref, "witness")
    subject_seq = seqs[arg.subject.seq - 1]

    if arg.kind is ArgumentKind.DOMINATION:
        if arg.subject.lo != arg.subject.hi:
            raise StructuralError(f"domination subject {arg.subject.span} is not a single position")
        if not arg.witnesses:
            raise StructuralError("domination argument without witnesses")
        p = subject_seq[arg.subject.lo - 1]
        for ref in arg.witnesses:
            if ref.seq == arg.subject.seq and arg.subject.lo in ref.positions():
                return False
            seq = seqs[ref.seq - 1]
            if not (weakly_dominates(p, seq[ref.lo - 1], counter) and weakly_dominates(p, seq[ref.hi - 1], counter)):
                return False
        return True

    first, last = subject_seq[arg.subject.lo - 1], subject_seq[arg.subject.hi - 1]
    for ref in arg.witnesses:
        if ref.seq == arg.subject.seq:
            return False
        if not _maximality_witness_holds(seqs[ref.seq - 1], ref, first, last, counter):
            return False
    return True


def verify_maxima_certificate(seqs, cert, counter=None):
    """Decide whether cert proves that its output blocks form the maxima set.

    VALID needs every argument to hold, one MAXIMALITY argument per output
    block, output blocks that concatenate into a staircase, domination
    subjects taken from the output, and every input position inside an
    output block or a domination witness.
    """
    try:
        for ref in cert.output_blocks:
            require_in_range(seqs, ref, "output block")
        results = [check_maxima_argument(seqs, arg, counter) for arg in cert.arguments]
    except StructuralError as exc:
        return Verdict.invalid(f"structural: {exc}")

    for index, holds in enumerate(results, start=1):
        if not holds:
            return Verdict.invalid(f"argument {index} ({cert.arguments[index - 1].kind.value}) does not hold")

    subjects = Counter(arg.subject.span for arg in cert.arguments if arg.kind is ArgumentKind.MAXIMALITY)
    outputs = Counter(ref.span for ref in cert.output_blocks)
    if subjects != outputs:
        mismatch = sorted((subjects - outputs) + (outputs - subjects))
        return Verdict.invalid(f"output block {mismatch[0]} is not the subject of exactly one maximality argument")

    output = [seqs[ref.seq - 1][pos - 1] for ref in cert.output_blocks for pos in ref.positions()]
    for prev, nxt in zip(output, output[1:]):
        charge(counter)
        if not (prev.x < nxt.x and prev.y > nxt.y):
            return Verdict.invalid(f"output is not a staircase at {prev} then {nxt}")

    in_output = {(ref.seq, pos) for ref in cert.output_blocks for pos in ref.positions()}
    for index, arg in enumerate(cert.arguments, start=1):
        if arg.kind is ArgumentKind.DOMINATION and (arg.subject.seq, arg.subject.lo) not in in_output:
            return Verdict.invalid(f"argument {index} (DOM) has a subject outside the output")

    covering = [ref.span for ref in cert.output_blocks]
    covering += [w.span for arg in cert.arguments if arg.kind is ArgumentKind.DOMINATION for w in arg.witnesses]
    hole = first_uncovered([len(s) for s in seqs], covering)
    if hole is not None:
        return Verdict.invalid(f"uncovered position: sequence {hole[0]} position {hole[1]}")
    return Verdict.ok()

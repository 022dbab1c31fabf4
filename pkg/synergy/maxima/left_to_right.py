"""Left-to-Right certification of a union of staircases.

The union's maxima are swept from right to left. Output points that sit
at consecutive positions of one staircase form the output blocks, and
every other point must be dominated by some output point. The points
that may dominate a given point form an interval of the output, so a
left-to-right greedy stabbing of those intervals, where block ends come
for free, picks the fewest extra domination subjects. The resulting
certificate has the minimum number of argument points.
"""
import math
from bisect import bisect_left, bisect_right

from synergy.geom_core import CERTIFY, MERGE, PreconditionError, charge, phase
from synergy.maxima.certificate import ArgumentKind, BlockRef, MaximaArgument, MaximaCertificate, maximality_witness
from synergy.maxima.staircase import require_staircases


def _union_maxima(seqs, counter):
    tagged = [(p, k, pos) for k, seq in enumerate(seqs, start=1) for pos, p in enumerate(seq, start=1)]
    # right to left, higher first, lowest sequence index first among copies
    tagged.sort(key=lambda t: (-t[0].x, -t[0].y, t[1]))
    charge(counter, len(tagged) * max(1, math.ceil(math.log2(len(tagged) or 1))))
    output = []
    best_y = None
    for p, k, pos in tagged:
        charge(counter)
        if best_y is None or p.y > best_y:
            output.append((k, pos))
            best_y = p.y
    output.reverse()
    return output


def _blocks(output):
    blocks = []
    for k, pos in output:
        if blocks and blocks[-1][0] == k and blocks[-1][2] == pos - 1:
            blocks[-1][2] = pos
        else:
            blocks.append([k, pos, pos])
    return [BlockRef(k, lo, hi) for k, lo, hi in blocks]


def left_to_right_merge(seqs, counter=None):
    """Maxima of the union of staircases with a certificate of minimal length.

    Returns:
        (staircase, MaximaCertificate)
    """
    if not seqs:
        raise PreconditionError("left_to_right_merge needs at least one sequence")
    require_staircases(seqs)
    seqs = [list(s) for s in seqs]

    with phase(counter, MERGE):
        output = _union_maxima(seqs, counter)
    staircase = [seqs[k - 1][pos - 1] for k, pos in output]
    blocks = _blocks(output)

    with phase(counter, CERTIFY):
        rank = {key: index for index, key in enumerate(output)}
        xs = [p.x for p in staircase]
        neg_ys = [-p.y for p in staircase]

        # for every non-output point, the output interval that dominates it
        intervals = []
        for k, seq in enumerate(seqs, start=1):
            for pos, z in enumerate(seq, start=1):
                if (k, pos) in rank:
                    continue
                charge(counter, 2)
                lo = bisect_left(xs, z.x)
                hi = bisect_right(neg_ys, -z.y) - 1
                intervals.append((hi, lo, k, pos))

        stabbers = sorted({rank[(ref.seq, ref.lo)] for ref in blocks} | {rank[(ref.seq, ref.hi)] for ref in blocks})
        assignment = {}
        for hi, lo, k, pos in sorted(intervals):
            charge(counter)
            at = bisect_left(stabbers, lo)
            if at == len(stabbers) or stabbers[at] > hi:
                stabbers.insert(at, hi)
                chosen = hi
            else:
                chosen = stabbers[at]
            assignment.setdefault(chosen, []).append((k, pos))

        arguments = []
        for subject_rank, victims in sorted(assignment.items()):
            k_s, pos_s = output[subject_rank]
            witnesses = []
            for k, pos in sorted(victims):
                if witnesses and witnesses[-1][0] == k and witnesses[-1][2] == pos - 1:
                    witnesses[-1][2] = pos
                else:
                    witnesses.append([k, pos, pos])
            arguments.append(
                MaximaArgument(
                    ArgumentKind.DOMINATION,
                    BlockRef(k_s, pos_s, pos_s),
                    tuple(BlockRef(k, lo, hi) for k, lo, hi in witnesses),
                )
            )
        for block in blocks:
            first, last = seqs[block.seq - 1][block.lo - 1], seqs[block.seq - 1][block.hi - 1]
            found = (maximality_witness(seqs, k, first, last, counter) for k in range(1, len(seqs) + 1) if k != block.seq)
            arguments.append(MaximaArgument(ArgumentKind.MAXIMALITY, block, tuple(ref for ref in found if ref is not None)))

    return staircase, MaximaCertificate(tuple(arguments), tuple(blocks))

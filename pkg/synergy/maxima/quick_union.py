"""Quick Union Maxima: merge staircases around median pivots.

Each round picks an output point p near the median of the middle
x-coordinates, discards everything p dominates, carves out the block of
output around p in its own staircase and splits the rest into a left and
a right sub-instance. All searches are doubling searches, so a round
costs time logarithmic in the sizes of the blocks it removes.
"""
import logging

from synergy.geom_core import CERTIFY, MERGE, End, PreconditionError, doubling_search, lower_median, phase
from synergy.maxima.certificate import ArgumentKind, BlockRef, MaximaArgument, MaximaCertificate, maximality_witness
from synergy.maxima.staircase import require_staircases

logger = logging.getLogger(__name__)


def _search(seq, lo, hi, pred, counter):
    return doubling_search(lo, hi, lambda idx: pred(seq[idx]), End.BOTH, counter)


def quick_union_maxima(seqs, counter=None):
    """Maxima of the union of staircases, with a certificate.

    Args:
        seqs: list of staircases (lists of Point sorted by x)
        counter: optional ProbeCounter; searches are charged to "merge",
            witness construction to "certify"

    Returns:
        (staircase, MaximaCertificate) with 1-based block references into seqs.
    """
    if not seqs:
        raise PreconditionError("quick_union_maxima needs at least one sequence")
    require_staircases(seqs)
    seqs = [list(s) for s in seqs]

    arguments = []
    output_blocks = []
    # a sub-instance is a list of (sequence index, lo, hi), 0-based inclusive
    pending = [[(k, 0, len(s) - 1) for k, s in enumerate(seqs) if s]]
    with phase(counter, MERGE):
        while pending:
            segments = pending.pop()
            if not segments:
                continue
            if len(segments) == 1:
                k, lo, hi = segments[0]
                block = BlockRef(k + 1, lo + 1, hi + 1)
                output_blocks.append(block)
                arguments.append(MaximaArgument(ArgumentKind.MAXIMALITY, block))
                continue
            left, right = _split_round(seqs, segments, arguments, output_blocks, counter)
            pending.append(right)
            pending.append(left)

    output_blocks.sort(key=lambda ref: seqs[ref.seq - 1][ref.lo - 1].x)
    staircase = [seqs[ref.seq - 1][pos - 1] for ref in output_blocks for pos in ref.positions()]
    logger.debug("merged %d staircases into %d points over %d blocks", len(seqs), len(staircase), len(output_blocks))
    return staircase, MaximaCertificate(tuple(arguments), tuple(output_blocks))


def _split_round(seqs, segments, arguments, output_blocks, counter):
    # median of the middle x-coordinates
    middles = [seqs[k][lo + (hi - lo) // 2].x for k, lo, hi in segments]
    mu = lower_median(middles, counter)

    # first position at or right of mu in every segment
    splits = [_search(seqs[k], lo, hi, lambda q: q.x >= mu, counter) for k, lo, hi in segments]

    # p: highest point at or right of mu, rightmost among equals
    owner = None
    for index, ((k, lo, hi), s) in enumerate(zip(segments, splits)):
        if s > hi:
            continue
        q = seqs[k][s]
        if owner is not None:
            best = seqs[segments[owner][0]][splits[owner]]
            if (q.y, q.x) <= (best.y, best.x):
                continue
        owner = index
    j, lo_j, hi_j = segments[owner]
    s_j = splits[owner]
    p = seqs[j][s_j]
    others = [(index, k, lo, hi, s) for index, ((k, lo, hi), s) in enumerate(zip(segments, splits)) if index != owner]

    # what p dominates: the low end of the left part and the start of the right part
    dominated = {}
    ell = r = None
    for index, k, lo, hi, s in others:
        seq = seqs[k]
        first_low = _search(seq, lo, s - 1, lambda q: q.y <= p.y, counter)
        first_right = _search(seq, s, hi, lambda q: q.x > p.x, counter)
        dominated[index] = (first_low, first_right - 1)
        if first_low > lo and (ell is None or seq[first_low - 1].x > ell.x):
            ell = seq[first_low - 1]
        if first_right <= hi and (r is None or seq[first_right].y > r.y):
            r = seq[first_right]

    # the output block around p in its own staircase
    seq_j = seqs[j]
    a = lo_j if ell is None else _search(seq_j, lo_j, s_j, lambda q: q.x > ell.x, counter)
    b = hi_j if r is None else _search(seq_j, s_j, hi_j, lambda q: q.y <= r.y, counter) - 1
    first, last = seq_j[a], seq_j[b]
    block = BlockRef(j + 1, a + 1, b + 1)
    output_blocks.append(block)

    # the ends of the block dominate more of what is left on either side
    discards = {a: [], s_j: [], b: []}
    left, right = [], []
    if a > lo_j:
        left.append((j, lo_j, a - 1))
    if b < hi_j:
        right.append((j, b + 1, hi_j))
    for index, k, lo, hi, s in others:
        seq = seqs[k]
        first_low, last_right = dominated[index]
        if first_low <= last_right:
            discards[s_j].append(BlockRef(k + 1, first_low + 1, last_right + 1))
        below_first = _search(seq, lo, first_low - 1, lambda q: q.y <= first.y, counter)
        if below_first < first_low:
            discards[a].append(BlockRef(k + 1, below_first + 1, first_low))
        past_last = _search(seq, last_right + 1, hi, lambda q: q.x > last.x, counter)
        if past_last > last_right + 1:
            discards[b].append(BlockRef(k + 1, last_right + 2, past_last))
        if below_first > lo:
            left.append((k, lo, below_first - 1))
        if past_last <= hi:
            right.append((k, past_last, hi))
    for position, refs in sorted(discards.items()):
        if refs:
            subject = BlockRef(j + 1, position + 1, position + 1)
            arguments.append(MaximaArgument(ArgumentKind.DOMINATION, subject, tuple(refs)))

    with phase(counter, CERTIFY):
        max_witnesses = []
        for _, k, _, _, _ in others:
            ref = maximality_witness(seqs, k + 1, first, last, counter)
            if ref is not None:
                max_witnesses.append(ref)
    arguments.append(MaximaArgument(ArgumentKind.MAXIMALITY, block, tuple(max_witnesses)))
    logger.debug("pivot %s mu=%s block %d..%d in sequence %d", p, mu, a + 1, b + 1, j + 1)
    return left, right

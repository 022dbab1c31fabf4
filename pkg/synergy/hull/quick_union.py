"""Quick Union Hull: merge upper hull sequences around median-slope pivots.

Each round takes the median mu of the middle-edge slopes and finds the
point p with the highest supporting line of slope mu. The tangents from p
to the other chains bound the output block around p: p's own chain stays
on the hull up to the point where a bridge to another chain takes over.
The bridges to every chain on one side of p are raced in lockstep on the
same vertex of p's chain, and a race stops as soon as another one is
proved to leave p's chain earlier. Everything between the hull neighbours
of the block is eliminated. A line from each neighbour to the far end of
its side drains the outer parts, and both sides recurse. Before a side is
split again its single-point chains are paired up, so at most one of
them takes part in a round.

The left half of a round is the right half run on x-mirrored views of
the chains, so only the right half is written out.

A point that occurs in several sequences has one live copy. The other
copies shadow it: they are eliminated with it, or by it once it is
output. Chains therefore hold distinct points, and every vertex used as
an anchor is the copy that ends up in the output.
"""
import logging
from collections import defaultdict
from collections.abc import Sequence
from fractions import Fraction

from synergy.geom_core import (
    CERTIFY,
    MERGE,
    BlockRef,
    End,
    Ordering,
    Point,
    PreconditionError,
    charge,
    cmp_slopes,
    doubling_search,
    lower_median,
    phase,
    side_of_line,
    slope,
)
from synergy.hull.certificate import HullArgument, HullArgumentKind, HullCertificate
from synergy.hull.tangents import _race, _supporting, _tangent_right
from synergy.hull.upper_hull import require_upper_hulls

logger = logging.getLogger(__name__)


class _Reflected(Sequence):
    """Read-only view of an upper hull reflected through the y-axis and reversed."""

    def __init__(self, seq):
        self._seq = seq

    def __len__(self):
        return len(self._seq)

    def __getitem__(self, index):
        if not 0 <= index < len(self._seq):
            raise IndexError(index)
        q = self._seq[len(self._seq) - 1 - index]
        return Point(-q.x, q.y)


def _search(seq, lo, hi, pred, counter):
    return doubling_search(lo, hi, lambda idx: pred(seq[idx]), End.BOTH, counter)


def _steepest(origin, views, candidates, counter):
    """Candidate (c, idx) seen from origin under the largest slope, farthest on ties."""
    best = None
    for c, idx in candidates:
        q = views[c][idx]
        if best is not None:
            order = cmp_slopes(origin, q, origin, top, counter)
            if order is Ordering.LT or (order is Ordering.EQ and q.x <= top.x):
                continue
        best, top = (c, idx), q
    return best


def _reach(views, segments, owner, s, counter):
    """Right end b of the output block around views[j][s], and b's hull successor.

    Returns:
        (b, successor) where successor is (c, idx) or None
    """
    j, _, hi_j = segments[owner]
    own = views[j]
    p = own[s]
    # the parts of the other segments strictly right of p
    rights = []
    for index, (c, lo, hi) in enumerate(segments):
        if index == owner:
            continue
        first = _search(views[c], lo, hi, lambda q: q.x > p.x, counter)
        if first <= hi:
            rights.append((c, first, hi))

    if not rights:
        b = hi_j
    elif s == hi_j:
        b = s
    else:
        # steepest tangent from p over all the other chains
        c, idx = _steepest(p, views, [(c, _tangent_right(p, views[c], lo, hi, counter)) for c, lo, hi in rights], counter)
        tangent = views[c][idx]
        u = own[s + 1]
        order = cmp_slopes(p, u, p, tangent, counter)
        # own chain dips under the tangent at once
        if order is Ordering.LT:
            b = s
        elif order is Ordering.EQ:
            b = s + 1 if u.x > tangent.x else s
        else:
            # every point right of p is on or below the line p-tangent; own[s+1..m] are above it
            m = doubling_search(s + 1, hi_j, lambda i: side_of_line(p, tangent, own[i]) <= 0, End.LOW, counter) - 1
            rivals = []
            for c, lo, hi in rights:
                # points left of own[m] lie under own[s..m]
                cut = _search(views[c], lo, hi, lambda q: q.x > own[m].x, counter)
                if cut <= hi:
                    rivals.append((views[c], cut, hi))
            b = _race(own, s, m, rivals, Fraction(own[m].x), counter) if rivals else m

    # the successor of b is its own neighbour or a tangent contact to the right
    end = own[b]
    candidates = [(j, b + 1)] if b < hi_j else []
    for c, lo, hi in rights:
        cut = _search(views[c], lo, hi, lambda q: q.x > end.x, counter)
        if cut <= hi:
            candidates.append((c, _tangent_right(end, views[c], cut, hi, counter)))
    return b, _steepest(end, views, candidates, counter)


def _end_line(views, segments, neighbour, counter):
    """Drain the prefixes lying under the line from the leftmost point to neighbour.

    neighbour is the rightmost point of the segments (a hull vertex).

    Returns:
        (leftmost anchor or None, eliminated ranges, remaining segments)
    """
    if neighbour is None or len(segments) < 2:
        return None, [], segments
    # leftmost first point, highest on ties
    leftmost = None
    for c, lo, _ in segments:
        q = views[c][lo]
        charge(counter)
        if leftmost is None or (q.x, -q.y) < (far.x, -far.y):
            leftmost, far = (c, lo), q
    near = views[neighbour[0]][neighbour[1]]
    if far.x >= near.x:
        return None, [], segments

    value = slope(far, near)
    # each remaining chain loses the prefix under the line far-near
    ranges, kept = [], []
    for c, lo, hi in segments:
        if c in (leftmost[0], neighbour[0]):
            kept.append((c, lo, hi))
            continue
        seq = views[c]
        peak = _supporting(seq, lo, hi, value, counter)
        if side_of_line(far, near, seq[peak], counter) <= 0:
            last = hi
        else:
            last = doubling_search(lo, peak, lambda i: side_of_line(far, near, seq[i]) > 0, End.LOW, counter) - 1
        if last >= lo:
            ranges.append((c, lo, last))
        if last < hi:
            kept.append((c, last + 1, hi))
    return leftmost, ranges, kept


def _flip_index(views, c, idx):
    return len(views[c]) - 1 - idx


def _flip_range(views, c, lo, hi):
    size = len(views[c])
    return c, size - 1 - hi, size - 1 - lo


def _runs(positions):
    """Maximal runs of consecutive positions in one sequence, as (k, lo, hi)."""
    runs = []
    for k, pos in sorted(positions):
        if runs and runs[-1][0] == k and runs[-1][2] == pos - 1:
            runs[-1][2] = pos
        else:
            runs.append([k, pos, pos])
    return [tuple(run) for run in runs]


class _Merge:
    """Live chains of one merge, and the arguments collected while splitting them.

    A chain is a list of (k, pos) input positions whose points form a strict
    upper hull. Segments (c, lo, hi) are inclusive index ranges of chain c;
    anchors (c, idx) name one chain vertex.
    """

    def __init__(self, seqs, counter):
        self.seqs = seqs
        self.counter = counter
        self.chains, self.points, self.mirrored, self.sources = [], [], [], []
        # live position -> positions at the same x and no higher, which share its fate
        self.shadows = defaultdict(list)
        self.eliminators = []
        live = {}
        for k, seq in enumerate(seqs):
            chain = []
            for pos, q in enumerate(seq):
                if q in live:
                    self.shadows[live[q]].append((k, pos))
                else:
                    live[q] = (k, pos)
                    chain.append((k, pos))
            if chain:
                self.add_chain(chain)
        if self.shadows:
            logger.debug("%d repeated points shadow their first copy", sum(map(len, self.shadows.values())))

    def add_chain(self, chain):
        points = [self.seqs[k][pos] for k, pos in chain]
        self.chains.append(chain)
        self.points.append(points)
        self.mirrored.append(_Reflected(points))
        self.sources.append(frozenset(k for k, _ in chain))
        return len(self.chains) - 1

    def segments(self):
        return [(c, 0, len(chain) - 1) for c, chain in enumerate(self.chains)]

    def vertex(self, anchor):
        c, idx = anchor
        return self.chains[c][idx]

    def positions(self, c, lo, hi):
        """Input positions of chain c over lo..hi, shadows included."""
        for at in self.chains[c][lo:hi + 1]:
            yield at
            yield from self.shadows.get(at, ())

    def pair_singletons(self, segments):
        """Pair up single-point segments until at most one is left.

        Two points with distinct x become a new two-point chain; of two
        points on one vertical the lower one shadows the upper one.
        """
        while True:
            singles = [segment for segment in segments if segment[1] == segment[2]]
            if len(singles) < 2:
                return sorted(segments)
            segments = [segment for segment in segments if segment[1] < segment[2]]
            if len(singles) % 2:
                segments.append(singles.pop())
            for (c, i, _), (d, k, _) in zip(singles[::2], singles[1::2]):
                u, v = self.points[c][i], self.points[d][k]
                charge(self.counter)
                if u.x == v.x:
                    top, low = ((c, i), (d, k)) if u.y > v.y else ((d, k), (c, i))
                    top_at, low_at = self.vertex(top), self.vertex(low)
                    self.shadows[top_at].append(low_at)
                    self.shadows[top_at].extend(self.shadows.pop(low_at, ()))
                    segments.append((top[0], top[1], top[1]))
                else:
                    pair = [self.vertex((c, i)), self.vertex((d, k))]
                    if v.x < u.x:
                        pair.reverse()
                    segments.append((self.add_chain(pair), 0, 1))
            logger.debug("paired %d single points", len(singles))

    def eliminate(self, first, second, ranges):
        doomed = [at for c, lo, hi in ranges if lo <= hi for at in self.positions(c, lo, hi)]
        if doomed:
            self.eliminators.append((self.vertex(first), self.vertex(second), doomed))

    def output(self, c, lo, hi, others):
        """Blocks of the input sequences that make up chain c over lo..hi.

        Returns:
            list of (BlockRef, sequences for the CONVEX witnesses)
        """
        blocks = []
        for k, first, last in _runs(self.chains[c][lo:hi + 1]):
            blocks.append((BlockRef(k + 1, first + 1, last + 1), tuple(sorted(others - {k}))))
        for at in self.chains[c][lo:hi + 1]:
            if at in self.shadows:
                self.eliminators.append((at, at, self.shadows[at]))
        return blocks

    def pivot_of(self, segments):
        points = self.points
        slopes = []
        for c, lo, hi in segments:
            if hi > lo:
                middle = lo + (hi - lo + 1) // 2 - 1
                slopes.append(slope(points[c][middle], points[c][middle + 1]))
        mu = lower_median(slopes, self.counter) if slopes else Fraction(0)

        # highest supporting line of slope mu, leftmost on ties
        owner = s = best = None
        for index, (c, lo, hi) in enumerate(segments):
            t = _supporting(points[c], lo, hi, mu, self.counter)
            q = points[c][t]
            value = q.y - mu * q.x
            charge(self.counter)
            if best is None or value > best or (value == best and q.x < points[segments[owner][0]][s].x):
                owner, s, best = index, t, value
        return mu, owner, s

    def split(self, segments):
        """One round on two or more segments.

        Returns:
            ((chain, a, b, other sequences) of the output block, left segments, right segments)
        """
        points, counter = self.points, self.counter
        mu, owner, s = self.pivot_of(segments)
        j, lo_j, hi_j = segments[owner]
        size_j = len(points[j])

        b, successor = _reach(points, segments, owner, s, counter)
        flipped = [_flip_range(points, *segment) for segment in segments]
        b_flipped, predecessor = _reach(self.mirrored, flipped, owner, size_j - 1 - s, counter)
        a = size_j - 1 - b_flipped
        if predecessor is not None:
            predecessor = (predecessor[0], _flip_index(points, *predecessor))

        p, first, last = points[j][s], points[j][a], points[j][b]
        pred_point = points[predecessor[0]][predecessor[1]] if predecessor else None
        succ_point = points[successor[0]][successor[1]] if successor else None

        # x bands of every other segment: left of the predecessor, up to the block,
        # under the block left of p, straight below p, under the block right of p,
        # and up to the successor
        far_left, near_left, at, near_right, far_right = [], [], [], [], []
        left, right = [], []
        for index, (c, lo, hi) in enumerate(segments):
            seq = points[c]
            if index == owner:
                if predecessor is None:
                    far_left.append((c, lo, a - 1))
                elif predecessor[0] == c:
                    left.append((c, lo, predecessor[1]))
                    far_left.append((c, predecessor[1] + 1, a - 1))
                else:
                    cut = _search(seq, lo, a - 1, lambda q: q.x >= pred_point.x, counter)
                    left.append((c, lo, cut - 1))
                    far_left.append((c, cut, a - 1))
                if successor is None:
                    far_right.append((c, b + 1, hi))
                elif successor[0] == c:
                    far_right.append((c, b + 1, successor[1] - 1))
                    right.append((c, successor[1], hi))
                else:
                    cut = _search(seq, b + 1, hi, lambda q: q.x > succ_point.x, counter)
                    far_right.append((c, b + 1, cut - 1))
                    right.append((c, cut, hi))
                continue

            # each band search starts where the previous one stopped
            if predecessor is None:
                start = lo
            else:
                start = _search(seq, lo, hi, lambda q: q.x >= pred_point.x, counter)
                if predecessor[0] == c:
                    start += 1
                left.append((c, lo, start - 1))
            near_left_lo = _search(seq, start, hi, lambda q: q.x >= first.x, counter)
            at_lo = _search(seq, near_left_lo, hi, lambda q: q.x >= p.x, counter)
            near_right_lo = _search(seq, at_lo, hi, lambda q: q.x > p.x, counter)
            far_right_lo = _search(seq, near_right_lo, hi, lambda q: q.x > last.x, counter)
            if successor is None:
                stop = hi + 1
            else:
                stop = _search(seq, far_right_lo, hi, lambda q: q.x > succ_point.x, counter)
                if successor[0] == c:
                    stop -= 1
                right.append((c, stop, hi))
            far_left.append((c, start, near_left_lo - 1))
            near_left.append((c, near_left_lo, at_lo - 1))
            at.append((c, at_lo, near_right_lo - 1))
            near_right.append((c, near_right_lo, far_right_lo - 1))
            far_right.append((c, far_right_lo, stop - 1))

        # points straight below p join the closest eliminator that spans p.x
        merged = {}
        for c, lo, hi in at:
            if lo <= hi:
                merged[c] = lo
        pivot_anchor, a_anchor, b_anchor = (j, s), (j, a), (j, b)
        if b > s:
            near_right = [(c, merged.get(c, lo), hi) for c, lo, hi in near_right]
        elif successor is not None:
            far_right = [(c, merged.get(c, lo), hi) for c, lo, hi in far_right]
        elif a < s:
            near_left = [(c, lo, hi if c not in merged else merged[c]) for c, lo, hi in near_left]
        elif predecessor is not None:
            far_left = [(c, lo, hi if c not in merged else merged[c]) for c, lo, hi in far_left]
        else:
            self.eliminate(pivot_anchor, pivot_anchor, [(c, lo, lo) for c, lo in merged.items()])

        # predecessor, a, p, b and successor are consecutive hull vertices
        if predecessor is not None:
            self.eliminate(predecessor, a_anchor, far_left)
        self.eliminate(a_anchor, pivot_anchor, near_left)
        self.eliminate(pivot_anchor, b_anchor, near_right)
        if successor is not None:
            self.eliminate(b_anchor, successor, far_right)

        # what is left of each side is drained from its far end
        left = sorted(segment for segment in left if segment[1] <= segment[2])
        right = sorted(segment for segment in right if segment[1] <= segment[2])
        left = self.drain_left(left, predecessor)
        right = self.drain_right(right, successor)

        others = frozenset().union(*(self.sources[c] for index, (c, _, _) in enumerate(segments) if index != owner))
        logger.debug(
            "mu=%s pivot %s: block %d..%d of chain %d, %d left and %d right segments",
            mu, p, a, b, j, len(left), len(right),
        )
        return (j, a, b, others), left, right

    def drain_left(self, segments, neighbour):
        leftmost, ranges, kept = _end_line(self.points, segments, neighbour, self.counter)
        if leftmost is not None:
            self.eliminate(leftmost, neighbour, ranges)
        return sorted(kept)

    def drain_right(self, segments, neighbour):
        points = self.points
        flipped = [_flip_range(points, *segment) for segment in segments]
        if neighbour is not None:
            neighbour = (neighbour[0], _flip_index(points, *neighbour))
        rightmost, ranges, kept = _end_line(self.mirrored, flipped, neighbour, self.counter)
        kept = [_flip_range(points, *segment) for segment in kept]
        if rightmost is not None:
            rightmost = (rightmost[0], _flip_index(points, *rightmost))
            neighbour = (neighbour[0], _flip_index(points, *neighbour))
            self.eliminate(neighbour, rightmost, [_flip_range(points, *r) for r in ranges])
        return sorted(kept)

    def eliminator_arguments(self):
        arguments = []
        for first, second, doomed in self.eliminators:
            p, q = sorted((self.seqs[first[0]][first[1]], self.seqs[second[0]][second[1]]))
            witnesses = []
            for k, lo, hi in _runs(doomed):
                d = lo if p.x == q.x else _supporting(self.seqs[k], lo, hi, slope(p, q), self.counter)
                witnesses.append(BlockRef(k + 1, lo + 1, hi + 1, d + 1))
            anchors = ((first[0] + 1, first[1] + 1), (second[0] + 1, second[1] + 1))
            arguments.append(HullArgument(HullArgumentKind.ELIMINATOR, anchors, tuple(witnesses)))
        return arguments


def _inside(entering, leaving):
    """A slope strictly between the edges around a hull vertex."""
    if entering is not None and leaving is not None:
        return (entering + leaving) / 2
    if leaving is not None:
        return leaving + 1
    if entering is not None:
        return entering - 1
    return Fraction(0)


def _strictly_under(z, apex, value):
    return z.y < apex.y + value * (z.x - apex.x)


def _convex_arguments(seqs, blocks, counter):
    """One CONVEX argument per output block, blocks sorted by x."""
    arguments = []
    for index, (ref, others) in enumerate(blocks):
        seq = seqs[ref.seq - 1]
        first, last = seq[ref.lo - 1], seq[ref.hi - 1]
        before = None
        if index > 0:
            prev = blocks[index - 1][0]
            before = seqs[prev.seq - 1][prev.hi - 1]
        after = None
        if index + 1 < len(blocks):
            nxt = blocks[index + 1][0]
            after = seqs[nxt.seq - 1][nxt.lo - 1]

        # slopes of the hull edges into and out of both ends of the block
        into_first = slope(before, first) if before is not None else None
        into_last = slope(seq[ref.hi - 2], last) if ref.hi > ref.lo else into_first
        out_of_first = slope(first, seq[ref.lo]) if ref.hi > ref.lo else None
        out_of_last = slope(last, after) if after is not None else None
        if ref.hi == ref.lo:
            out_of_first = out_of_last
        at_first = _inside(into_first, out_of_first)
        at_last = _inside(into_last, out_of_last)

        # sequences strictly under the block and the edges next to it
        witnesses = []
        for k in others:
            other = seqs[k]
            top = len(other) - 1
            c = _supporting(other, 0, top, at_first, counter)
            e = _supporting(other, 0, top, at_last, counter)
            charge(counter, 2)
            if not (_strictly_under(other[c], first, at_first) and _strictly_under(other[e], last, at_last)):
                continue
            d = c
            if ref.hi > ref.lo:
                d = _supporting(other, 0, top, slope(first, last), counter)
                if side_of_line(first, last, other[d], counter) >= 0:
                    continue
            witnesses.append(BlockRef(k + 1, c + 1, e + 1, d + 1))
        anchors = ((ref.seq, ref.lo), (ref.seq, ref.hi))
        arguments.append(HullArgument(HullArgumentKind.CONVEX, anchors, tuple(witnesses)))
    return arguments


def quick_union_hull(seqs, counter=None):
    """Upper hull of the union of upper hull sequences, with a certificate.

    Args:
        seqs: list of upper hull sequences (lists of Point, x increasing)
        counter: optional ProbeCounter; searches are charged to "merge",
            witness and pivot construction to "certify"

    Returns:
        (upper hull, HullCertificate) with 1-based block references into seqs.
    """
    if not seqs:
        raise PreconditionError("quick_union_hull needs at least one sequence")
    require_upper_hulls(seqs)
    seqs = [list(s) for s in seqs]
    merge = _Merge(seqs, counter)

    blocks = []
    pending = [merge.segments()]
    with phase(counter, MERGE):
        while pending:
            segments = merge.pair_singletons(pending.pop())
            if not segments:
                continue
            if len(segments) == 1:
                blocks.extend(merge.output(*segments[0], frozenset()))
                continue
            (c, a, b, others), left, right = merge.split(segments)
            blocks.extend(merge.output(c, a, b, others))
            pending.append(right)
            pending.append(left)

    # blocks come out in recursion order
    blocks.sort(key=lambda item: seqs[item[0].seq - 1][item[0].lo - 1].x)
    with phase(counter, CERTIFY):
        arguments = merge.eliminator_arguments() + _convex_arguments(seqs, blocks, counter)
    hull = [seqs[ref.seq - 1][pos - 1] for ref, _ in blocks for pos in ref.positions()]
    logger.debug("merged %d upper hulls into %d vertices over %d blocks", len(seqs), len(hull), len(blocks))
    return hull, HullCertificate(tuple(arguments), tuple(ref for ref, _ in blocks))

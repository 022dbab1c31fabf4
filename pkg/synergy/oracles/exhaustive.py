"""Exponential searches for the smallest decompositions and certificates.

Each search refuses inputs above its size guard with SizeGuardError.
"""
import logging
import math
from functools import lru_cache
from itertools import combinations

from synergy.geom_core import SizeGuardError, weakly_dominates
from synergy.hull.simplicity import is_simple_chain
from synergy.maxima.certificate import (
    ArgumentKind,
    BlockRef,
    MaximaArgument,
    MaximaCertificate,
    certificate_length,
    maximality_witness,
    verify_maxima_certificate,
)
from synergy.maxima.smooth import validate_smooth
from synergy.maxima.staircase import require_staircases

logger = logging.getLogger(__name__)

SMOOTH_GUARD = 12
SIMPLE_GUARD = 16
CERTIFICATE_GUARD = 6


def _guard(size, limit, what):
    if size > limit:
        raise SizeGuardError(f"{what} searches at most {limit} points, got {size}")


def _fewest_parts(points, is_part):
    """Minimum number of consecutive parts, each accepted by is_part."""
    best = [0] + [math.inf] * len(points)
    for end in range(1, len(points) + 1):
        for start in range(end):
            if best[start] + 1 < best[end] and is_part(start, end):
                best[end] = best[start] + 1
    return best[-1]


def min_smooth_partition(points):
    """Fewest consecutive runs that each pass validate_smooth."""
    points = list(points)
    _guard(len(points), SMOOTH_GUARD, "min_smooth_partition")
    return _fewest_parts(points, lambda start, end: validate_smooth(points[start:end]))


def _simple_oracle(points):
    @lru_cache(maxsize=None)
    def simple(start, end):
        return is_simple_chain(points[start:end])

    return simple


def min_simple_partition(points):
    """Fewest consecutive simple chains."""
    points = list(points)
    _guard(len(points), SIMPLE_GUARD, "min_simple_partition")
    return _fewest_parts(points, _simple_oracle(points))


def min_entropy_simple_partition(points):
    """Smallest partition entropy over all splits into consecutive simple chains.

    With n fixed the entropy is a sum of per-part terms, so the minimum
    over every split is found part by part.
    """
    points = list(points)
    _guard(len(points), SIMPLE_GUARD, "min_entropy_simple_partition")
    n = len(points)
    if not n:
        return 0.0
    simple = _simple_oracle(points)
    best = [0.0] + [math.inf] * n
    for end in range(1, n + 1):
        for start in range(end):
            if best[start] == math.inf or not simple(start, end):
                continue
            size = end - start
            best[end] = min(best[end], best[start] + size / n * math.log2(n / size))
    # the per-part sum drifts from partition_entropy's fsum in the last bits
    return max(best[-1], 0.0)


def _blocks(seqs, output):
    ordered = sorted(output, key=lambda key: seqs[key[0] - 1][key[1] - 1])
    blocks = []
    for k, pos in ordered:
        if blocks and blocks[-1][0] == k and blocks[-1][2] == pos - 1:
            blocks[-1][2] = pos
        else:
            blocks.append([k, pos, pos])
    return [BlockRef(k, lo, hi) for k, lo, hi in blocks]


def _certificate(seqs, blocks, subjects, victims):
    arguments = []
    for subject in subjects:
        p = seqs[subject[0] - 1][subject[1] - 1]
        mine = [v for v in victims if weakly_dominates(p, seqs[v[0] - 1][v[1] - 1])]
        victims = [v for v in victims if v not in mine]
        if mine:
            witnesses = tuple(BlockRef(k, pos, pos) for k, pos in mine)
            arguments.append(MaximaArgument(ArgumentKind.DOMINATION, BlockRef(*subject, subject[1]), witnesses))
    for block in blocks:
        first, last = seqs[block.seq - 1][block.lo - 1], seqs[block.seq - 1][block.hi - 1]
        found = (maximality_witness(seqs, k, first, last) for k in range(1, len(seqs) + 1) if k != block.seq)
        arguments.append(MaximaArgument(ArgumentKind.MAXIMALITY, block, tuple(ref for ref in found if ref is not None)))
    return MaximaCertificate(tuple(arguments), tuple(blocks))


def min_certificate_length_exhaustive(seqs):
    """Fewest argument points over all valid maxima certificates of seqs.

    Tries every set of output positions, with maximal output blocks, and
    every set of domination subjects among them. Each candidate is built
    into a certificate and accepted only when the verifier says VALID.
    Splitting an output block only adds block ends, so maximal blocks
    lose nothing.
    """
    require_staircases(seqs)
    positions = [(k, pos) for k, seq in enumerate(seqs, start=1) for pos in range(1, len(seq) + 1)]
    _guard(len(positions), CERTIFICATE_GUARD, "min_certificate_length_exhaustive")
    if not positions:
        return 0

    best = None
    for size in range(1, len(positions) + 1):
        for output in combinations(positions, size):
            blocks = _blocks(seqs, output)
            ends = {(b.seq, b.lo) for b in blocks} | {(b.seq, b.hi) for b in blocks}
            victims = [key for key in positions if key not in output]
            inner = [key for key in output if key not in ends]
            for count in range(len(inner) + 1):
                if best is not None and len(ends) + count >= best:
                    break
                for extra in combinations(inner, count):
                    cert = _certificate(seqs, blocks, sorted(ends) + list(extra), victims)
                    if verify_maxima_certificate(seqs, cert):
                        length = certificate_length(cert)
                        best = length if best is None else min(best, length)
    logger.debug("exhaustive certificate search over %d points: %s", len(positions), best)
    return best


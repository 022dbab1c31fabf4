"""Convex hull of an unsorted point sequence, adaptive to both order and structure."""
import logging

from synergy.geom_core import CHAIN_HULL, CostReport, ProbeCounter, block_count, certificate_length, m_list, phase
from synergy.hull.certificate import HullCertificate
from synergy.hull.melkman import simple_chain_hull
from synergy.hull.partition import partition_simple_chains
from synergy.hull.quick_union import quick_union_hull
from synergy.hull.upper_hull import mirror

logger = logging.getLogger(__name__)


def _upper_hull(points, counter, algorithm):
    counter = ProbeCounter() if counter is None else counter
    partition = partition_simple_chains(points, counter)

    with phase(counter, CHAIN_HULL):
        # the partition already proved every piece simple
        uppers = [simple_chain_hull(piece, counter, check=False)[0] for piece in partition.pieces(points)]

    if uppers:
        hull, cert = quick_union_hull(uppers, counter)
    else:
        hull, cert = [], HullCertificate()

    report = CostReport(
        algorithm=algorithm,
        n=len(points),
        h=len(hull),
        kappa=partition.kappa,
        rho=len(uppers),
        beta=block_count(cert),
        delta=certificate_length(cert),
        m_list=m_list(cert),
        sizes=partition.sizes,
        entropy=partition.entropy,
        phase_counts=counter.snapshot(),
    )
    logger.debug("%s: n=%d kappa=%d h=%d", algorithm, report.n, report.kappa, report.h)
    return hull, report


def synergistic_upper_hull(points, counter=None):
    """Split the input into simple chains, hull each one, then merge the hulls.

    Runs in O(n log min(kappa, h)) predicates on top of the partition
    for kappa simple chains and h hull vertices.

    Args:
        points: list of Point in input order
        counter: optional ProbeCounter; a fresh one is used when omitted

    Returns:
        (upper hull, CostReport)
    """
    return _upper_hull(list(points), counter, "synergistic_upper_hull")


def synergistic_lower_hull(points, counter=None):
    """Lower hull, left to right, by running the upper pipeline on the mirrored input."""
    hull, report = _upper_hull(mirror(points), counter, "synergistic_lower_hull")
    return mirror(hull), report


def convex_hull(points, counter=None):
    """Hull vertices counterclockwise, starting at the lowest leftmost point.

    Collinear input gives its two extreme points and a single point gives
    itself.
    """
    points = list(points)
    if not points:
        return []
    lower, _ = synergistic_lower_hull(points, counter)
    upper, _ = synergistic_upper_hull(points, counter)
    top = list(reversed(upper))
    if top and top[0] == lower[-1]:
        top.pop(0)
    if top and top[-1] == lower[0]:
        top.pop()
    return lower + top

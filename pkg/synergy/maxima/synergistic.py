"""Maxima of an unsorted point sequence, adaptive to both order and structure."""
import logging

from synergy.geom_core import MERGE, CostReport, ProbeCounter, phase
from synergy.maxima.certificate import MaximaCertificate, block_count, certificate_length, m_list
from synergy.maxima.quick_union import quick_union_maxima
from synergy.maxima.smooth import decompose_smooth
from synergy.maxima.staircase import dedup_points

logger = logging.getLogger(__name__)


def synergistic_maxima(points, counter=None):
    """Split the input into smooth runs, then merge their staircases.

    Runs in O(n log min(sigma, h)) comparisons for sigma smooth runs and
    h output points.

    Args:
        points: list of Point in input order
        counter: optional ProbeCounter; a fresh one is used when omitted

    Returns:
        (staircase, CostReport)
    """
    counter = ProbeCounter() if counter is None else counter
    unique = dedup_points(points, counter)
    decomposition = decompose_smooth(unique, counter)

    with phase(counter, MERGE):
        if decomposition.sigma:
            staircase, cert = quick_union_maxima(decomposition.staircases, counter)
        else:
            staircase, cert = [], MaximaCertificate()

    report = CostReport(
        algorithm="synergistic_maxima",
        n=len(unique),
        h=len(staircase),
        sigma=decomposition.sigma,
        rho=decomposition.sigma,
        beta=block_count(cert),
        delta=certificate_length(cert),
        m_list=m_list(cert),
        sizes=[run.hi - run.lo + 1 for run in decomposition.runs],
        phase_counts=counter.snapshot(),
    )
    logger.debug("synergistic maxima: n=%d sigma=%d h=%d", report.n, report.sigma, report.h)
    return staircase, report

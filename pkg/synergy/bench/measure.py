"""Run one algorithm on one instance with a fresh counter and check its output."""
import logging
from dataclasses import replace

from synergy.geom_core import CostReport, OracleMismatchError, Point, PreconditionError, ProbeCounter
from synergy.geom_core.blocks import block_count, certificate_length, m_list
from synergy.hull import levcopoulos_hull, partition_simple_chains, quick_union_hull, synergistic_upper_hull
from synergy.maxima import decompose_smooth, dedup_points, left_to_right_merge, quick_union_maxima, synergistic_maxima
from synergy.oracles import brute_maxima, brute_upper_hull, sweep_maxima
from synergy.bench.wall_clock import timed

logger = logging.getLogger(__name__)

MAXIMA, HULL = "maxima", "hull"
POINTS, SEQUENCES = "points", "sequences"


def _brute_maxima(points, counter):
    staircase = brute_maxima(points, counter)
    return staircase, CostReport(n=len(set(points)), h=len(staircase))


def _brute_upper_hull(points, counter):
    hull = brute_upper_hull(points, counter)
    return hull, CostReport(n=len(points), h=len(hull))


def _levcopoulos(points, counter):
    upper, _, report = levcopoulos_hull(points, counter)
    return upper, report


def _merging(algorithm):
    def run(seqs, counter):
        output, cert = algorithm(seqs, counter)
        report = CostReport(
            n=sum(len(s) for s in seqs),
            h=len(output),
            rho=len(seqs),
            beta=block_count(cert),
            delta=certificate_length(cert),
            m_list=m_list(cert),
            sizes=[len(s) for s in seqs],
        )
        return output, report

    return run


# id -> (runner, problem, input shape)
ALGORITHMS = {
    "brute_maxima": (_brute_maxima, MAXIMA, POINTS),
    "synergistic_maxima": (synergistic_maxima, MAXIMA, POINTS),
    "quick_union_maxima": (_merging(quick_union_maxima), MAXIMA, SEQUENCES),
    "left_to_right_merge": (_merging(left_to_right_merge), MAXIMA, SEQUENCES),
    "brute_upper_hull": (_brute_upper_hull, HULL, POINTS),
    "levcopoulos_hull": (_levcopoulos, HULL, POINTS),
    "synergistic_upper_hull": (synergistic_upper_hull, HULL, POINTS),
    "quick_union_hull": (_merging(quick_union_hull), HULL, SEQUENCES),
}


def _is_sequences(instance):
    return bool(instance) and not isinstance(instance[0], Point)


def _fill_measures(report, problem, points):
    """Instance measures an algorithm did not compute itself, taken uncounted."""
    if problem == MAXIMA and not report.sigma:
        return replace(report, sigma=decompose_smooth(dedup_points(points)).sigma)
    if problem == HULL and not report.kappa:
        partition = partition_simple_chains(points, longest=True)
        return replace(report, kappa=partition.kappa, sizes=partition.sizes, entropy=partition.entropy)
    return report


def measure(algorithm, instance, seed=None):
    """Run algorithm on instance and return its CostReport.

    Args:
        algorithm: one of ALGORITHMS
        instance: a list of Point, or a list of sequences for the merge algorithms
        seed: generator seed recorded in the report

    Raises:
        PreconditionError: unknown algorithm or an instance of the wrong shape.
        OracleMismatchError: the output differs from the reference oracle.
    """
    if algorithm not in ALGORITHMS:
        raise PreconditionError(f"unknown algorithm {algorithm!r}; expected one of {sorted(ALGORITHMS)}")
    runner, problem, shape = ALGORITHMS[algorithm]
    if (shape == SEQUENCES) != _is_sequences(instance):
        raise PreconditionError(f"{algorithm} takes {shape}, got the other kind of instance")

    points = [p for seq in instance for p in seq] if shape == SEQUENCES else list(instance)
    counter = ProbeCounter()
    (output, report), wall_ns = timed(runner, instance, counter)

    expected = sweep_maxima(points) if problem == MAXIMA else brute_upper_hull(points)
    if list(output) != expected:
        raise OracleMismatchError(f"{algorithm} returned {len(output)} points, the oracle {len(expected)}")

    if shape == POINTS:
        report = _fill_measures(report, problem, points)
    report = replace(report, algorithm=algorithm, phase_counts=counter.snapshot(), seed=seed, wall_ns=wall_ns)
    logger.info("measured %s: n=%d h=%d predicates=%d", algorithm, report.n, report.h, report.predicate_count)
    return report

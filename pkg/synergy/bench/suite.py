"""Scaling suites: grids of instance specs, measured and fitted."""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import pandas as pd

from synergy.geom_core import PreconditionError
from synergy.bench.generator import Family, InstanceSpec, generate
from synergy.bench.measure import measure

logger = logging.getLogger(__name__)

COLUMNS = [
    "family",
    "n",
    "param",
    "seed",
    "algorithm",
    "phase",
    "predicates",
    "h",
    "sigma",
    "kappa",
    "beta",
    "delta",
    "entropy",
    "wall_ns",
]


@dataclass(frozen=True)
class SuiteResult:
    """cells pairs every InstanceSpec with its CostReport; slope is None for a single-point grid."""

    cells: list
    slope: float | None
    frame: pd.DataFrame


def _run_cell(job):
    spec, algorithm = job
    return measure(algorithm, generate(spec), seed=spec.seed)


def count_of(report, phase=None):
    return report.phase_counts.get(phase, 0) if phase else report.predicate_count


def fit_slope(cells, phase=None, axis="param"):
    """Least-squares slope of count / n against log2 of the axis value."""
    xs = [math.log2(max(getattr(spec, axis), 1)) for spec, _ in cells]
    if len(set(xs)) < 2:
        return None
    ys = [count_of(report, phase) / max(report.n, 1) for _, report in cells]
    return float(np.polyfit(xs, ys, 1)[0])


def reports_to_frame(cells):
    """One row per (run, phase); a run without counts still gets one row."""
    rows = []
    for spec, report in cells:
        phases = report.phase_counts or {"": 0}
        for label, count in phases.items():
            rows.append(
                {
                    "family": spec.family.value,
                    "n": spec.n,
                    "param": spec.param,
                    "seed": spec.seed,
                    "algorithm": report.algorithm,
                    "phase": label,
                    "predicates": count,
                    "h": report.h,
                    "sigma": report.sigma,
                    "kappa": report.kappa,
                    "beta": report.beta,
                    "delta": report.delta,
                    "entropy": report.entropy,
                    "wall_ns": report.wall_ns,
                }
            )
    return pd.DataFrame(rows, columns=COLUMNS)


def scaling_suite(specs, algorithm, phase=None, axis="param", workers=1):
    """Measure algorithm on every spec and fit count / n against log2(axis).

    Args:
        specs: non-empty list of InstanceSpec
        algorithm: algorithm id understood by measure
        phase: phase label to fit, or None for the total count
        axis: InstanceSpec field on the x axis ("param" or "n")
        workers: processes to spread the cells over; 1 runs in-process

    Raises:
        PreconditionError: the grid is empty.
    """
    specs = list(specs)
    if not specs:
        raise PreconditionError("scaling_suite needs at least one instance spec")
    jobs = [(spec, algorithm) for spec in specs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_cell, jobs))
    else:
        reports = [_run_cell(job) for job in jobs]

    cells = list(zip(specs, reports))
    slope = fit_slope(cells, phase, axis)
    logger.info("%s over %d cells: slope %s", algorithm, len(cells), slope)
    return SuiteResult(cells, slope, reports_to_frame(cells))


def _doublings(low, high):
    values = []
    value = low
    while value <= high:
        values.append(value)
        value *= 2
    return values


def sigma_suite(n=2 ** 16, seed=7, workers=1):
    """Merge-phase cost of synergistic maxima as the smooth run count doubles."""
    specs = [InstanceSpec(Family.SMOOTH_RUNS, n, sigma, seed) for sigma in _doublings(1, min(256, n // 2))]
    return scaling_suite(specs, "synergistic_maxima", phase="merge", workers=workers)


def output_suite(n=2 ** 16, seed=7, workers=1):
    """Total cost of synergistic maxima as the output size doubles."""
    specs = [InstanceSpec(Family.SMALL_OUTPUT, n, h, seed) for h in _doublings(2, min(1024, n))]
    return scaling_suite(specs, "synergistic_maxima", workers=workers)


def entropy_suite(n=2 ** 16, kappa=16, seed=7, workers=1):
    """Baseline hull cost on one long arc plus kappa - 1 strays, over n."""
    sizes = _doublings(max(2 * kappa, n // 16), n)
    specs = [InstanceSpec(Family.SIMPLE_CHAINS, size, kappa, seed, profile="skewed") for size in sizes]
    return scaling_suite(specs, "levcopoulos_hull", phase="merge", axis="n", workers=workers)


SUITES = {
    "sigma": sigma_suite,
    "output": output_suite,
    "entropy": entropy_suite,
}


def run_suite(name, n, seed=7, workers=1):
    if name not in SUITES:
        raise PreconditionError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    return SUITES[name](n=n, seed=seed, workers=workers)

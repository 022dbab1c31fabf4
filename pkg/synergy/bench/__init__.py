from synergy.geom_core import CostReport
from synergy.bench.generator import Family, InstanceSpec, generate, write_instance
from synergy.bench.measure import ALGORITHMS, measure
from synergy.bench.suite import (
    COLUMNS,
    SUITES,
    SuiteResult,
    entropy_suite,
    fit_slope,
    output_suite,
    reports_to_frame,
    run_suite,
    scaling_suite,
    sigma_suite,
)
from synergy.bench.wall_clock import timed

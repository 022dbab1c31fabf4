from synergy.geom_core import partition_entropy
from synergy.oracles.brute import brute_maxima, brute_upper_hull, sweep_maxima
from synergy.oracles.exhaustive import (
    CERTIFICATE_GUARD,
    SIMPLE_GUARD,
    SMOOTH_GUARD,
    min_certificate_length_exhaustive,
    min_entropy_simple_partition,
    min_simple_partition,
    min_smooth_partition,
)

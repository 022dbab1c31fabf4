from synergy.geom_core.counter import (
    CERTIFY,
    CHAIN_HULL,
    DECOMPOSE,
    DEDUP,
    MERGE,
    PARTITION,
    ProbeCounter,
    charge,
    phase,
)
from synergy.geom_core.errors import (
    DegenerateLineError,
    GeometryError,
    InfeasibleSpecError,
    InvalidSequenceError,
    OracleMismatchError,
    ParseError,
    PreconditionError,
    SizeGuardError,
    StructuralError,
)
from synergy.geom_core.point import COORD_BOUND, End, Line, Ordering, Point, Side, VerticalLine, slope
from synergy.geom_core.predicates import cmp_slopes, cross_sign_slope, dominates, orient, side_of_line, weakly_dominates
from synergy.geom_core.report import CostReport, partition_entropy
from synergy.geom_core.search import doubling_search, lower_median, select
from synergy.geom_core.blocks import (
    BlockRef,
    Verdict,
    block_count,
    certificate_length,
    first_uncovered,
    m_list,
    require_in_range,
)

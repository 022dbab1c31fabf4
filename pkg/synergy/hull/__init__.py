from synergy.hull.certificate import (
    HullArgument,
    HullArgumentKind,
    HullCertificate,
    check_hull_argument,
    verify_hull_certificate,
)
from synergy.hull.levcopoulos import levcopoulos_hull
from synergy.hull.melkman import simple_chain_hull
from synergy.hull.partition import ChainPartition, partition_simple_chains
from synergy.hull.quick_union import quick_union_hull
from synergy.hull.simplicity import is_simple_chain
from synergy.hull.synergistic import convex_hull, synergistic_lower_hull, synergistic_upper_hull
from synergy.hull.tangents import supporting_point, tangent_between_hulls, tangents_from_point
from synergy.hull.upper_hull import (
    is_upper_hull,
    merge_two_upper_hulls,
    mirror,
    require_upper_hulls,
    upper_hull_of_sorted,
)

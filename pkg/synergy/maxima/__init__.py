from synergy.maxima.certificate import (
    ArgumentKind,
    BlockRef,
    MaximaArgument,
    MaximaCertificate,
    Verdict,
    block_count,
    certificate_length,
    check_maxima_argument,
    m_list,
    maximality_witness,
    verify_maxima_certificate,
)
from synergy.maxima.left_to_right import left_to_right_merge
from synergy.maxima.merge import merge_staircases_pairwise, merge_two_staircases
from synergy.maxima.quick_union import quick_union_maxima
from synergy.maxima.smooth import SmoothDecomposition, SmoothRun, decompose_smooth, validate_smooth
from synergy.maxima.staircase import dedup_points, is_staircase, require_staircases
from synergy.maxima.synergistic import synergistic_maxima

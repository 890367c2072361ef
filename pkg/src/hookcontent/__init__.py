"""Exact hook-content calculus for strict partitions and shifted tableaux."""

from .corners import (
    CornerProfile,
    RationalPoint,
    Transition,
    add_box_transitions,
    corner_profile,
    hook_ratio,
    pf_expand,
    pf_kernel,
    pf_moment,
    q_k,
    q_nu,
    q_shift,
)
from .diffop import (
    InconclusiveError,
    PartitionFunction,
    PowerSumSpec,
    apply_D,
    apply_D_power,
    detect_polynomial,
    inverse_hook,
    telescoped_sum,
    verify_telescope,
)
from .identities import IdentityCheck, IdentityReport, run_identity, run_suite
from .partitions import (
    ShiftedBox,
    SkewShape,
    StrictPartition,
    boxes,
    count_ssyt,
    count_ssyt_bruteforce,
    count_ssyt_skew,
    enumerate_extensions,
    enumerate_strict,
    hook_product,
    scaled_count,
)

__version__ = "0.1.0"

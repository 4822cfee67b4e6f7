"""Exact enumeration of valid hook configurations of pattern-avoiding
permutations, partial orders on Motzkin paths, and the bijections linking
the two families of objects."""

from .perm import (
    avoiders,
    components,
    contains,
    descents,
    direct_sum,
    is_layered,
    lr_maxima,
    normalize,
    tail_length,
)
from .vhc import (
    Hook,
    HookConfig,
    abundancy,
    count_vhcs,
    count_vhcs_of_class,
    enumerate_vhcs,
    split_at_hook,
    tail_refined_count,
    validate,
)
from .motzkin import (
    all_paths,
    axis_touch_stat,
    count_intervals,
    decompose,
    first_down_stat,
    leq,
    longevity,
    motzkin_number,
    odd_downrun_dyck_count,
    path_class,
)
from .bijection import (
    PathInterval,
    forward,
    inverse,
    is_diagonal_image,
    lr_matrix,
    reconstruct_matrix,
)
from .counting import (
    closed_form_132_321,
    closed_form_312_321,
    count_av231,
    count_av231_1243,
    count_av231_321,
    count_av312,
    count_av312_321,
    pair_counts_motzkin,
    prop_closed_forms,
    sankar_sum,
)
from .series import (
    Series,
    asymptotic_ratio_check,
    named_gf,
    q_residual,
    real_root,
    ts_div,
    ts_mul,
    ts_sqrt,
)
from .walks import walk_counts, walk_identity_check

__version__ = "0.1.0"

"""Ext groups between Weyl modules and simple modules for SL2 in characteristic p."""

from .engine import (
    ExtEngine,
    ExtQuery,
    LeafStatus,
    LeafTrace,
    cohomology_dim,
    expand_trace,
    ext_dim,
    stability_profile,
    table_r_twist,
    table_self_twist,
    wall_reduce_sl3,
)
from .errors import CapExceeded
from .golden import GoldenRow, load_table
from .h2 import H2Reason, H2Witness, ext2_self_tower, h2_cross_check, h2_dim
from .strings import (
    BString,
    count_c_strings,
    doubling_family,
    enumerate_b_strings,
    growth_bounds,
    partitions_of_unity,
)
from .weights import (
    CaseKind,
    Characteristic,
    DigitCase,
    DigitExpansion,
    digit_case,
    p_adic_digits,
    split_simple,
    steinberg_factors,
    subset_tensor_weight,
)

__version__ = "0.1.0"

"""Exact-arithmetic laboratory for partition identities.

Thin python surface over the C++ core: partitions and their statistics,
enumeration-based counting families, truncated q-series generating functions,
the phi/psi bijection pair, and the named verification checks.
"""

import json as _json

from ._core import (  # noqa: F401
    Partition,
    PartitionParseError,
    TruncatedSeries,
    andrews_second_lhs,
    check_names,
    count_D,
    count_D1k_u,
    count_D_by_length,
    count_D_le,
    count_D_resmult,
    count_Dbar,
    count_O,
    count_O1k_u,
    count_O_by_length,
    count_O_class,
    count_O_le,
    d_index,
    distinct_parts,
    distinct_parts_resmult_at_least,
    enumerate_partitions,
    excess,
    excess_cumulative,
    excess_refined,
    fu_tang_lhs,
    gf_D,
    gf_D_resmult,
    gf_D_w,
    gf_Dbar,
    gf_jO,
    gf_O,
    gf_O_class,
    gf_O_class0,
    gf_O_w,
    is_in_D,
    is_in_O,
    kadic_form,
    mult_decomposition,
    o_index,
    parse_partition,
    parts_in_class,
    phi,
    psi,
    table29_text,
    total_parts,
)
from ._core import run_check as _run_check_raw
from ._core import verify_roundtrip as _verify_roundtrip_raw

__all__ = [name for name in dir() if not name.startswith("_")] + [
    "run_check",
    "verify_roundtrip",
]


def run_check(name, n_max=None, j_max=None, k_set=None, b_set=None, trunc=None):
    """Run a named verification check; returns the report as a dict."""
    return _json.loads(_run_check_raw(name, n_max, j_max, k_set, b_set, trunc))


def verify_roundtrip(n_max, k, b):
    """Exhaustive phi/psi round-trip check up to n_max; returns a dict."""
    return _json.loads(_verify_roundtrip_raw(n_max, k, b))

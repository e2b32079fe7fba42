"""Counting parameters of special unipotent representations of classical groups."""

from ._core import (
    UnipError,
    bv_dual,
    cell_diagrams,
    collapse,
    count_real_orbits,
    descend,
    gf,
    group_of,
    infinitesimal_character,
    is_valid_orbit,
    naive_descent,
    orbit_dim,
    pap,
    pap_signature,
    pbp,
    pbp_signature,
    primitive_pairs,
    split_parity,
    transpose,
    unip_count,
)

__all__ = [
    "UnipError",
    "bv_dual",
    "cell_diagrams",
    "collapse",
    "count_real_orbits",
    "descend",
    "gf",
    "group_of",
    "infinitesimal_character",
    "is_valid_orbit",
    "naive_descent",
    "orbit_dim",
    "pap",
    "pap_signature",
    "pbp",
    "pbp_signature",
    "primitive_pairs",
    "split_parity",
    "transpose",
    "unip_count",
]

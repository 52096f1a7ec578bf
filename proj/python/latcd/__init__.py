"""Finite lattices, congruence counts and congruence densities."""

from ._latcd import (
    Enumerated,
    Lattice,
    LatcdError,
    analyze,
    boolean4,
    canonical_code,
    chain,
    con_count,
    construct,
    core,
    density,
    direct_product,
    dual,
    enumerate,
    f_of_p,
    from_json,
    glued_sum,
    is_isomorphic,
    k_of_p,
    l_k_n,
    lnc,
    m_k,
    n_k,
    one_point_extension,
    run_cli,
    scd,
    to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact arithmetic and structure for graph inverse semigroups over finite graphs."""

from .cycles import (
    CycleMonoidType,
    Poly,
    PolyOne,
    PolyZero,
    cycle_monoid_type,
    factor_cycle,
    iso_to_polycyclic,
    poly_inv,
    poly_mul,
    verify_iso_window,
)
from .elements import (
    NonZero,
    Zero,
    edge_element,
    edge_inverse,
    enumerate_elements,
    green_D,
    green_H,
    green_L,
    green_R,
    inv,
    is_idempotent,
    mul,
    parse_element,
    path_element,
    solve_left,
    solve_right,
    vertex_element,
)
from .graph import (
    Edge,
    Graph,
    gis_is_infinite,
    has_cycle,
    is_strongly_connected,
    load_graph,
    parse_graph,
    weakly_connected_components,
)
from .paths import (
    Path,
    concat,
    cycles_at,
    enumerate_paths,
    first_return_cycles_at,
    is_prefix,
    parse_path,
    path_of,
    strip_prefix,
)
from .star import Outcome, StarWitness, Verdict, classify_dichotomy, star_sufficient, star_witness_search

__version__ = "0.1.0"
